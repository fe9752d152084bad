#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slicefn/slice.hpp"

namespace slicefn {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitVerify = 4;
inline constexpr int kExitInconsistent = 5;

// CSV "alpha,beta,f_w,f_x,f_y,f_z,abs_f" over a cell-centred n_alpha x n_beta
// grid of the bounding box of D+, beta-major. Nodes outside D carry nan values.
// Throws ArgumentError on unbounded domains.
std::string export_grid(const SliceFunction& f, const ImaginaryUnit& I, int n_alpha, int n_beta);

// Runs one command line (args exclude the program name). Results go to `out`
// (or the --out file), errors to `err` as {"error", "detail"} JSON.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicefn
