#pragma once

#include "qcongr/ring/cyclo_basis.hpp"
#include "qcongr/ring/int_poly.hpp"
#include "qcongr/ring/poly_gcd.hpp"
#include "qcongr/ring/rational_fn.hpp"
