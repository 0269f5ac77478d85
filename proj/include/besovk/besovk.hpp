#ifndef BESOVK_BESOVK_HPP
#define BESOVK_BESOVK_HPP

#include "besovk/errors.hpp"
#include "besovk/grid.hpp"
#include "besovk/query.hpp"
#include "besovk/coeffs.hpp"
#include "besovk/rearrange.hpp"
#include "besovk/norms.hpp"
#include "besovk/solve.hpp"
#include "besovk/oracle.hpp"
#include "besovk/kfunc.hpp"
#include "besovk/interp.hpp"

#endif  // BESOVK_BESOVK_HPP
