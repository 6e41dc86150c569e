// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "rfuwoc/sweep/sweep.hpp"

namespace rfuwoc::sweep {

/// Fixed column order:
///   axis_db, sop_exact, sop_asymptotic, sop_saturation, sop_oracle,
///   sop_mc, mc_ci_low, mc_ci_high, flags
/// Values are printed with %.17g (round-trip exact); absent methods leave
/// empty cells. Byte output is deterministic for identical inputs.
std::string to_csv(const SweepResult& result);

/// Writes to_csv(result) to path; I/O failures carry the path in the
/// exception message.
void emit_csv(const SweepResult& result, const std::string& path);

/// Parses a file produced by emit_csv; exact round trip of every value.
SweepResult parse_csv_file(const std::string& path);
SweepResult parse_csv(const std::string& content);

}  // namespace rfuwoc::sweep
