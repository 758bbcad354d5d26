#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "robinlab/bounds.hpp"
#include "robinlab/generators.hpp"
#include "robinlab/robin.hpp"

namespace robinlab {

// Fixed-format decimal image; '.' separator, locale-independent.
std::string fmt_hp(const BigFloat& x, unsigned digits = kDefaultDigits);

// CSV. Columns are part of the CLI contract and documented in --help.
void write_reports_csv(std::ostream& os, const std::vector<RobinReport>& reports, unsigned digits);
void write_canon_csv(std::ostream& os, const CanonicalComparison& c, unsigned digits);
void write_seq_csv(std::ostream& os, const std::vector<PrimorialPowerItem>& items, unsigned digits);
void write_ca_csv(std::ostream& os, const std::vector<CATraceRow>& rows, unsigned digits);
void write_bounds_csv(std::ostream& os, const std::vector<BoundCheck>& checks, unsigned digits);

// JSON, mirroring the field names of the domain types.
void write_reports_json(std::ostream& os, const std::vector<RobinReport>& reports, unsigned digits);
void write_canon_json(std::ostream& os, const CanonicalComparison& c, unsigned digits);
void write_seq_json(std::ostream& os, const std::vector<PrimorialPowerItem>& items, unsigned digits);
void write_ca_json(std::ostream& os, const std::vector<CATraceRow>& rows, unsigned digits);
void write_bounds_json(std::ostream& os, const std::vector<BoundCheck>& checks, unsigned digits);

// `[[2,4],[3,2],[5,1],[7,1]]`; rejects unsorted or non-prime bases.
FactoredInteger parse_factors_json(const std::string& text);
std::string factors_to_json(const FactoredInteger& n);

} // namespace robinlab
