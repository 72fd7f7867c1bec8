#pragma once

#include <string>
#include <string_view>

#include "hardy/bounds.hpp"
#include "hardy/extremal.hpp"
#include "hardy/multiplier.hpp"
#include "hardy/norms.hpp"
#include "hardy/polyalg.hpp"

namespace hardy {

/// Shortest decimal that round-trips; identical on every run.
std::string format_double(double v);

/// {"terms": [{"n": 6, "re": "1", "im": "0"}, ...]} with "p/q" strings; "scale_squared"
/// appears only when it is not 1. On input re/im may be JSON numbers or rational strings.
std::string dirichlet_to_json(const DirichletPoly& d);
DirichletPoly dirichlet_from_json(std::string_view text);
/// Same schema with "alpha": [[position, exponent], ...] in place of "n".
std::string trig_to_json(const TrigPoly& p);
TrigPoly trig_from_json(std::string_view text);

DirichletPoly read_dirichlet_file(const std::string& path);

std::string to_json(const NormEstimate& e);
std::string to_json(const RatioEstimate& e);
std::string to_json(const BoundReport& r);
std::string to_json(const LowerBoundReport& r);
std::string to_json(const ConditionSeries& s);

std::string csv_header(const NormEstimate&);
std::string csv_row(const NormEstimate& e);
std::string csv_header(const RatioEstimate&);
std::string csv_row(const RatioEstimate& e);
std::string csv_header(const BoundReport&);
std::string csv_row(const BoundReport& r);
/// x,p,q,k,n,ratio,ratio_method,stderr,target,asymptote,flags,seed
std::string csv_header(const LowerBoundReport&);
std::string csv_row(const LowerBoundReport& r);
/// n,term,partial_sum, one line per row.
std::string series_csv(const ConditionSeries& s);

} // namespace hardy
