/// @file  projsat.hpp
/// @brief Convenience header pulling in the whole library (except JSON)

#pragma once

#include "bdd.hpp"
#include "cnf.hpp"
#include "cofactor.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "oracle.hpp"
#include "projection.hpp"
#include "solver.hpp"
