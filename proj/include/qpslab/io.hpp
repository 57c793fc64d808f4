#pragma once
// Text serialization: matrix round-trip format, CSV tables, JSON groups
// and reports. All writers are byte-deterministic for identical inputs.

#include <iosfwd>
#include <string>

#include "qpslab/conv.hpp"
#include "qpslab/matrix.hpp"
#include "qpslab/measures.hpp"
#include "qpslab/stab.hpp"
#include "qpslab/weyl.hpp"
#include "qpslab/wigner.hpp"

namespace qps {

// 17 significant digits, round-trip exact for doubles
std::string fmt17(double v);

// "dim d n" header, then dim^2 lines "row col re im" in row-major order
void write_matrix(std::ostream& os, const Operator& op);
Operator read_matrix(std::istream& is);

std::string char_table_csv(const CharTable& table);      // "p;q,re,im"
std::string wigner_table_csv(const WignerTable& table);  // "p;q,w"
std::string stabilizer_group_json(const StabilizerGroup& group);
std::string trajectory_csv(const ConvTrajectory& traj);
std::string extremality_report_json(const ExtremalityReport& report);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace qps
