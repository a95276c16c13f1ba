#pragma once

#include "symq/adversary.hpp"
#include "symq/boolean_symmetric.hpp"
#include "symq/chopper.hpp"
#include "symq/derand.hpp"
#include "symq/estimator.hpp"
#include "symq/polynomial.hpp"
#include "symq/qsim.hpp"
#include "symq/rational.hpp"
#include "symq/rng.hpp"
#include "symq/serialization.hpp"
#include "symq/types.hpp"
#include "symq/verify.hpp"
