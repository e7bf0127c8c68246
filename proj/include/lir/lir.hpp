#ifndef LIR_LIR_HPP
#define LIR_LIR_HPP

#include "lir/bounds.hpp"
#include "lir/criterion.hpp"
#include "lir/dioph.hpp"
#include "lir/laguerre_k1.hpp"
#include "lir/numtheory.hpp"
#include "lir/polynomials.hpp"
#include "lir/report.hpp"
#include "lir/search.hpp"
#include "lir/smooth.hpp"

#endif  // LIR_LIR_HPP
