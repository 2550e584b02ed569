#pragma once

#include <ostream>

#include "synviz/analysis/analyzer.hpp"

namespace synviz::analysis {

/// hop_index, bin0..11, avg0..11, vol0..11, avgvol0..11, trig0..11, dynamics
void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const AnalysisFrame& frame);

}  // namespace synviz::analysis
