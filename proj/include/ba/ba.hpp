#pragma once

// Umbrella header: exact fields, windowed linear algebra, the triangular
// lattice, flags and billiard tables, value functions and canonical forms,
// and the q-binomial matrix family.

#include "ba/billiard.hpp"
#include "ba/errors.hpp"
#include "ba/field.hpp"
#include "ba/flags.hpp"
#include "ba/matrix.hpp"
#include "ba/prime_field.hpp"
#include "ba/qbinom.hpp"
#include "ba/rational.hpp"
#include "ba/selftest.hpp"
#include "ba/triangle.hpp"
#include "ba/valuefn.hpp"
