#pragma once

#include <json.hpp>

#include "greenhall/characters.hpp"
#include "greenhall/dvr.hpp"
#include "greenhall/green.hpp"
#include "greenhall/hecke.hpp"
#include "greenhall/laurent.hpp"
#include "greenhall/partition.hpp"
#include "greenhall/rational_function.hpp"

namespace greenhall {

using Json = nlohmann::ordered_json;

// Partitions serialize as arrays of parts, e.g. [2,1,1].
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// Laurent polynomials serialize as {"exp": "p/q", ...}.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// Rational functions serialize as {"num": ..., "den": ...}.
Json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

// Class functions serialize as {"<class partition>": value, ...} with
// comma-separated partition keys.
Json to_json(const ClassFunction& f);
Json to_json(const PairClassFunction& f);

Json to_json(const HeckeReport& r);

// Schema-validated input records.
LocalSystemSpec local_system_from_json(const Json& j);
DivisorTuple divisors_from_json(const Json& j);
Json to_json(const LocalSystemSpec& spec);
Json to_json(const DivisorTuple& d);

struct SuiteReport;

// Canonical report serialization: cases sorted by id, timings omitted unless
// requested (so identical runs serialize byte-identically).
Json report_to_json(const SuiteReport& report, bool include_timings = false);

}  // namespace greenhall
