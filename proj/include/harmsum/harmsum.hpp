#ifndef HARMSUM_HARMSUM_HPP
#define HARMSUM_HARMSUM_HPP

#include "harmsum/exact.hpp"
#include "harmsum/polynomial.hpp"
#include "harmsum/harmonic_expr.hpp"
#include "harmsum/render.hpp"
#include "harmsum/identities.hpp"
#include "harmsum/oracle.hpp"
#include "harmsum/catalogue.hpp"

#endif
