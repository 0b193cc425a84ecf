#ifndef HYPERSING_HYPERSING_HPP
#define HYPERSING_HYPERSING_HPP

#include "hypersing/chern.hpp"
#include "hypersing/classifier.hpp"
#include "hypersing/error.hpp"
#include "hypersing/groebner.hpp"
#include "hypersing/locus.hpp"
#include "hypersing/matrix.hpp"
#include "hypersing/milnor_lattice.hpp"
#include "hypersing/parse.hpp"
#include "hypersing/polynomial.hpp"
#include "hypersing/quadratic_form.hpp"
#include "hypersing/rational.hpp"
#include "hypersing/recognition.hpp"
#include "hypersing/surgery.hpp"

#endif  // HYPERSING_HYPERSING_HPP
