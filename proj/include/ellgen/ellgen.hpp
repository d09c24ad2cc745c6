#ifndef ELLGEN_ELLGEN_HPP
#define ELLGEN_ELLGEN_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "upoly.hpp"
#include "rational_function.hpp"
#include "laurent_poly.hpp"
#include "quotient_ring.hpp"
#include "weighted_poly.hpp"
#include "series.hpp"
#include "mseries.hpp"
#include "poly_algebra.hpp"
#include "partition.hpp"
#include "cohomology.hpp"
#include "genus.hpp"
#include "universal.hpp"
#include "level_n.hpp"
#include "jacobi.hpp"
#include "blowup.hpp"
#include "manifold_json.hpp"
#include "acceptance.hpp"

#endif
