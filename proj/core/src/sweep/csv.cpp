// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/sweep/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rfuwoc::sweep {

namespace {

constexpr const char* kHeader =
    "axis_db,sop_exact,sop_asymptotic,sop_saturation,sop_oracle,sop_mc,"
    "mc_ci_low,mc_ci_high,flags";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) {
  return v.has_value() ? fmt(*v) : std::string();
}

std::optional<double> parse_cell(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return std::stod(cell);
}

}  // namespace

std::string to_csv(const SweepResult& result) {
  std::string out(kHeader);
  out += '\n';
  for (const SweepRow& r : result.rows) {
    out += fmt(r.axis_db);
    out += ',';
    out += fmt(r.sop_exact);
    out += ',';
    out += fmt(r.sop_asymptotic);
    out += ',';
    out += fmt(r.sop_saturation);
    out += ',';
    out += fmt(r.sop_oracle);
    out += ',';
    out += fmt(r.sop_mc);
    out += ',';
    out += fmt(r.mc_ci_low);
    out += ',';
    out += fmt(r.mc_ci_high);
    out += ',';
    out += r.flags;
    out += '\n';
  }
  return out;
}

void emit_csv(const SweepResult& result, const std::string& path) {
  const std::string body = to_csv(result);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw std::runtime_error("emit_csv: cannot open for writing: " + path);
  }
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) {
    throw std::runtime_error("emit_csv: write failed: " + path);
  }
}

SweepResult parse_csv(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("parse_csv: unexpected header");
  }
  SweepResult result;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    // A line ending in ',' has an empty trailing cell.
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 9) {
      throw std::runtime_error("parse_csv: malformed row: " + line);
    }
    SweepRow row;
    row.axis_db = std::stod(cells[0]);
    row.sop_exact = parse_cell(cells[1]);
    row.sop_asymptotic = parse_cell(cells[2]);
    row.sop_saturation = parse_cell(cells[3]);
    row.sop_oracle = parse_cell(cells[4]);
    row.sop_mc = parse_cell(cells[5]);
    row.mc_ci_low = parse_cell(cells[6]);
    row.mc_ci_high = parse_cell(cells[7]);
    row.flags = cells[8];
    if (row.flags != "ok") result.all_converged = false;
    result.rows.push_back(row);
  }
  return result;
}

SweepResult parse_csv_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("parse_csv: cannot open: " + path);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str());
}

}  // namespace rfuwoc::sweep
