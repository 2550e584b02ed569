#include "synviz/analysis/csv.hpp"

#include <cstdio>
#include <string>

namespace synviz::analysis {

namespace {

void put(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, ",%.9g", v);
  out << buf;
}

}  // namespace

void write_csv_header(std::ostream& out) {
  out << "hop_index";
  for (const char* prefix : {"bin", "avg", "vol", "avgvol", "trig"}) {
    for (std::size_t i = 0; i < kBinCount; ++i) out << ',' << prefix << i;
  }
  out << ",dynamics\n";
}

void write_csv_row(std::ostream& out, const AnalysisFrame& f) {
  out << f.hop_index;
  for (const BinValues* series : {&f.bins, &f.avg_bins, &f.volatility, &f.avg_volatility}) {
    for (double v : *series) put(out, v);
  }
  for (std::size_t i = 0; i < kBinCount; ++i) out << ',' << (f.triggers[i] ? 1 : 0);
  put(out, f.dynamics_percent);
  out << '\n';
}

}  // namespace synviz::analysis
