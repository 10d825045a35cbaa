#pragma once

// Comparison table for the binary case plus the single-value lemmas, and
// plain bound grids in markdown or CSV.

#include <optional>
#include <string>
#include <vector>

#include "subspace/mdc.hpp"

namespace subspace {

struct Check {
  std::string name;
  std::string tier;  // "self-contained" or "external"
  BigInt expected;
  BigInt actual;
  bool pass() const { return expected == actual; }
};

struct ReportRow {
  int v = 0;
  int d = 0;
  BigInt improved_cdc;  // decomposition bound, external facts on
  BigInt ev;
  BigInt johnson_self;
  BigInt johnson_ext;
  std::string detail;  // method of the winning self-contained candidate
  std::optional<BigInt> lower;
};

struct PaperReport {
  std::vector<ReportRow> rows;
  std::vector<Check> checks;

  bool all_pass() const;
  std::string render() const;
};

PaperReport reproduce_paper(const MdcOptions& opt = {});

enum class TableFormat { md, csv };

/// Grid of mdc upper bounds for q fixed, v in [v_lo, v_hi], d in [d_lo, d_hi]
/// (cells with d > v are skipped).
std::string render_table(MdcEngine& engine, std::int64_t q, int v_lo, int v_hi, int d_lo,
                         int d_hi, TableFormat fmt);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace subspace
