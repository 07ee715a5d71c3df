#pragma once

#include "codegb/code.hpp"
#include "codegb/decode.hpp"
#include "codegb/errors.hpp"
#include "codegb/fglm.hpp"
#include "codegb/gf2.hpp"
#include "codegb/monomial.hpp"
#include "codegb/oracle.hpp"
