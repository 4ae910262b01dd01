#pragma once

#include "monoclose/betti.hpp"
#include "monoclose/closure.hpp"
#include "monoclose/decompose.hpp"
#include "monoclose/error.hpp"
#include "monoclose/exponent.hpp"
#include "monoclose/family.hpp"
#include "monoclose/figure.hpp"
#include "monoclose/ideal.hpp"
#include "monoclose/io.hpp"
#include "monoclose/simplex.hpp"
