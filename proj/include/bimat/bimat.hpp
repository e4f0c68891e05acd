#pragma once

// Umbrella header: the whole public surface of the library.

#include "bimat/bimatroid.hpp"
#include "bimat/construct.hpp"
#include "bimat/errors.hpp"
#include "bimat/gen.hpp"
#include "bimat/json_io.hpp"
#include "bimat/lorentzian.hpp"
#include "bimat/matrix.hpp"
#include "bimat/matroid.hpp"
#include "bimat/morphism.hpp"
#include "bimat/polynomial.hpp"
#include "bimat/prime_field.hpp"
#include "bimat/product.hpp"
#include "bimat/rational.hpp"
#include "bimat/rng.hpp"
#include "bimat/subset.hpp"
#include "bimat/verify.hpp"
