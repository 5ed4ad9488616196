#pragma once

// Machine-readable records (one JSON object per line, fixed key order), the
// sweep engine, and the aligned-table renderer. Shared by the CLI and the
// regression tests so both see byte-identical output.

#include "ruled/moduli.hpp"
#include "ruled/rank2.hpp"
#include "ruled/ulrich.hpp"

#include <json.hpp>

#include <vector>

namespace ruled {

using Record = nlohmann::ordered_json;

// Inclusive integer interval.
struct Range {
    Int lo;
    Int hi;
};

struct SweepSpec {
    Range g;
    Range e;
    Range a;
    Range b;
    GenericityFlags flags;
};

// Verdict record with the fixed key set {g,e,a,b,verdict,citation,classes,
// family_dim,notes}. classes lists [high, low] as coefficient pairs, or null
// when no candidate applies.
Record verdict_record(const RuledSurface& s, const Polarization& h, GenericityFlags flags);

// Candidate pair record: classes, twist degree, duality cross-check.
Record classes_record(const RuledSurface& s, const Polarization& h);

// Ulrich dual of a given class, with the involution cross-check.
Record dual_record(const RuledSurface& s, const Polarization& h, const DivisorClass& d);

// Rank-2 target and construction data. Prefers the ideal-sheaf construction
// when its sufficiency threshold is met, falls back to the e = 0 stable
// construction, and reports an insufficient ideal-sheaf datum only when
// nothing better applies. Throws std::domain_error when neither construction
// is available, naming each failed hypothesis.
Record rank2_record(const RuledSurface& s, const Polarization& h);

// Brute-force Ulrich classes on a Hirzebruch surface: one record per class
// found, then a summary row comparing against the candidate pair.
std::vector<Record> oracle_records(const RuledSurface& s, const Polarization& h,
                                   const Int& grid_limit);

// Segre stratum record.
Record strata_record(const Int& g, const Int& r, const Int& d, const Int& r_prime,
                     const Int& s);

// Symmetric-power theta data: invariants, target space, properness status.
Record theta_record(const RuledSurface& s, const Int& a, GenericityFlags flags);

// Lexicographic (g, e, a, b) sweep. Rows with e < -g become SKIP records
// with reason "nagata"; polarizations failing the very-ampleness conditions
// become SKIP records with reason "not_very_ample"; any other per-row
// failure becomes an ERROR record. Never throws for in-range rows.
std::vector<Record> run_sweep(const SweepSpec& spec);

// One compact JSON object per line, newline-terminated.
std::string to_lines(const std::vector<Record>& records);

// Aligned human-readable columns for verdict-shaped records.
std::string verdict_table(const std::vector<Record>& records);

} // namespace ruled
