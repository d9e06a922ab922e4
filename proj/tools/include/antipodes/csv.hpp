#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "antipodes/experiments.hpp"

namespace antipodes {

// Sweep table: header epsilon,n,neighbors,antipodes,ratio and, when any row
// has bounds, k,quad_form,norm_sq,lambda1,trace_mtm,chain_ok. An undefined
// ratio is an empty field.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

// Reads the first five columns of a sweep table; extra columns are ignored.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace antipodes
