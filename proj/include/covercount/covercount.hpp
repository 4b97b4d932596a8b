// covercount.hpp
//
// Umbrella header: the full exact counting engine for constructive k-covers
// of an n-set — Stirling/ISN tables, index spaces and labelings, the
// symmetry-reduced class pipeline, the per-class enumerator, cover-count
// assembly, the coherent-system layer, and the brute-force oracles.

#pragma once

#include "covercount/bigint.hpp"
#include "covercount/counting.hpp"
#include "covercount/enumerator.hpp"
#include "covercount/errors.hpp"
#include "covercount/index_space.hpp"
#include "covercount/labelings.hpp"
#include "covercount/oracle.hpp"
#include "covercount/reliability.hpp"
#include "covercount/stirling.hpp"
#include "covercount/symmetry.hpp"
