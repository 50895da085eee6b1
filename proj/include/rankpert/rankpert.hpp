#pragma once

/// Umbrella header: exact low-rank perturbations of the characteristic
/// polynomial over Q and GF(p), with canonical forms and a brute-force
/// verification oracle.

#include "rankpert/canonical.hpp"
#include "rankpert/factor.hpp"
#include "rankpert/field.hpp"
#include "rankpert/io.hpp"
#include "rankpert/matrix.hpp"
#include "rankpert/oracle.hpp"
#include "rankpert/perturb.hpp"
#include "rankpert/poly.hpp"
#include "rankpert/polymat.hpp"
#include "rankpert/random.hpp"
