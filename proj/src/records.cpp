#include "ruled/records.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace ruled {

namespace {

Record class_json(const DivisorClass& d) {
    return Record::array({to_ll(d.a), to_ll(d.b)});
}

Record pair_json(const CandidatePair& pair) {
    return Record::array({class_json(pair.high.cls), class_json(pair.low.cls)});
}

void put_inputs(Record& r, const RuledSurface& s, const Int& a, const Int& b) {
    r["g"] = to_ll(s.g());
    r["e"] = to_ll(s.e());
    r["a"] = to_ll(a);
    r["b"] = to_ll(b);
}

Record skip_record(const Int& g, const Int& e, const Int& a, const Int& b,
                   const std::string& reason) {
    Record r;
    r["g"] = to_ll(g);
    r["e"] = to_ll(e);
    r["a"] = to_ll(a);
    r["b"] = to_ll(b);
    r["verdict"] = "SKIP";
    r["citation"] = "";
    r["classes"] = nullptr;
    r["family_dim"] = nullptr;
    r["notes"] = reason;
    return r;
}

} // namespace

Record verdict_record(const RuledSurface& s, const Polarization& h, GenericityFlags flags) {
    const UlrichVerdict v = existence_verdict(s, h, flags);
    Record r;
    put_inputs(r, s, h.a(), h.b());
    r["verdict"] = to_string(v.outcome);
    r["citation"] = v.citation;
    r["classes"] = v.candidates ? pair_json(*v.candidates) : Record(nullptr);
    r["family_dim"] = v.family_dimension ? Record(to_ll(*v.family_dimension)) : Record(nullptr);
    r["notes"] = v.notes;
    return r;
}

Record classes_record(const RuledSurface& s, const Polarization& h) {
    const CandidatePair pair = candidate_classes(s, h);
    if (pair.high.cls + pair.low.cls != Int(3) * h.cls() + canonical_class(s))
        throw std::logic_error("candidate classes do not sum to 3H + K_S");
    Record r;
    put_inputs(r, s, h.a(), h.b());
    r["u_degree"] = to_ll(pair.high.u_degree);
    r["high"] = class_json(pair.high.cls);
    r["low"] = class_json(pair.low.cls);
    r["genericity_required"] = pair.high.genericity_required;
    return r;
}

Record dual_record(const RuledSurface& s, const Polarization& h, const DivisorClass& d) {
    const DivisorClass dual = ulrich_dual(s, h, d);
    Record r;
    put_inputs(r, s, h.a(), h.b());
    r["class"] = class_json(d);
    r["dual"] = class_json(dual);
    r["involution_ok"] = ulrich_dual(s, h, dual) == d;
    return r;
}

Record rank2_record(const RuledSurface& s, const Polarization& h) {
    const SpecialUlrichTarget target = special_target(s, h);
    std::optional<AcmrResult> acmr;
    std::string acmr_err;
    try {
        acmr = acmr_extension(s, h);
    } catch (const std::invalid_argument& ex) {
        acmr_err = ex.what();
    } catch (const std::domain_error& ex) {
        acmr_err = ex.what();
    }
    std::optional<ExtensionDatum> stable;
    std::string stable_err;
    try {
        stable = tstable_extension(s, h);
    } catch (const std::invalid_argument& ex) {
        stable_err = ex.what();
    } catch (const std::domain_error& ex) {
        stable_err = ex.what();
    }

    const bool use_acmr = acmr && (acmr->sufficient || !stable);
    if (!use_acmr && !stable)
        throw std::domain_error("no rank-2 construction applies: [" + acmr_err + "]; [" +
                                stable_err + "]");

    const ExtensionDatum& datum = use_acmr ? acmr->datum : *stable;
    if (!extension_chern_check(s, datum, target))
        throw std::logic_error("rank-2 construction fails its Chern-class target");

    Record r;
    put_inputs(r, s, h.a(), h.b());
    r["c1"] = class_json(target.c1);
    r["c2"] = to_ll(target.c2);
    r["construction"] = use_acmr ? "ideal_sheaf_extension" : "stable_extension";
    r["sub"] = class_json(datum.sub);
    r["quot"] = class_json(datum.quot);
    r["z_degree"] = to_ll(datum.z_degree);
    r["generic_v_degree"] = to_ll(datum.generic_v_degree);
    r["sufficient"] = use_acmr ? acmr->sufficient : true;
    r["threshold"] = use_acmr ? Record(rat_str(acmr->threshold)) : Record(nullptr);
    r["family_dim"] =
        use_acmr ? Record(to_ll(acmr_family_dimension(s, h))) : Record(nullptr);
    r["semistable_bound"] = (use_acmr && s.e() <= 0)
                                ? Record(rat_str(semistable_family_bound(s, h)))
                                : Record(nullptr);
    r["stability_note"] = use_acmr ? acmr->stability_note
                                   : "stable by construction (e = 0 extension)";
    return r;
}

std::vector<Record> oracle_records(const RuledSurface& s, const Polarization& h,
                                   const Int& grid_limit) {
    const std::vector<DivisorClass> found = ulrich_classes_g0(s, h, grid_limit);
    std::optional<CandidatePair> pair;
    try {
        pair = candidate_classes(s, h);
    } catch (const std::domain_error&) {
        // parity obstruction: no candidates to compare against
    }
    std::vector<Record> out;
    for (const DivisorClass& d : found) {
        Record r;
        put_inputs(r, s, h.a(), h.b());
        r["class"] = class_json(d);
        std::string family = "other";
        if (pair && d == pair->high.cls) family = "high";
        if (pair && d == pair->low.cls) family = "low";
        r["family"] = family;
        out.push_back(std::move(r));
    }
    bool matches = false;
    if (pair) {
        matches = found.size() == 2 &&
                  ((found[0] == pair->high.cls && found[1] == pair->low.cls) ||
                   (found[0] == pair->low.cls && found[1] == pair->high.cls));
    } else {
        matches = found.empty();
    }
    Record summary;
    put_inputs(summary, s, h.a(), h.b());
    summary["grid_limit"] = to_ll(grid_limit);
    summary["found"] = found.size();
    summary["classes"] = [&] {
        Record arr = Record::array();
        for (const DivisorClass& d : found) arr.push_back(class_json(d));
        return arr;
    }();
    summary["candidates"] =
        pair ? Record::array({class_json(pair->high.cls), class_json(pair->low.cls)})
             : Record(nullptr);
    summary["matches_candidates"] = matches;
    out.push_back(std::move(summary));
    return out;
}

Record strata_record(const Int& g, const Int& r, const Int& d, const Int& r_prime,
                     const Int& s) {
    const SegreStratum st = stratum(g, r, d, r_prime, s);
    Record rec;
    rec["g"] = to_ll(g);
    rec["r"] = to_ll(st.r);
    rec["d"] = to_ll(st.d);
    rec["r_prime"] = to_ll(st.r_prime);
    rec["s"] = to_ll(st.s);
    rec["dimension"] = to_ll(st.dimension);
    rec["in_closure_of_next"] = st.in_closure_of_next;
    return rec;
}

Record theta_record(const RuledSurface& s, const Int& a, GenericityFlags flags) {
    const SymPowerInvariants sym = sym_power_invariants(s, a);
    const ThetaTarget target = theta_target(s.g(), a, sym.degree);
    Record r;
    r["g"] = to_ll(s.g());
    r["e"] = to_ll(s.e());
    r["a"] = to_ll(a);
    r["rank"] = to_ll(sym.rank);
    r["degree"] = to_ll(sym.degree);
    r["twist_integral"] = sym.twist_integral;
    r["twist_degree"] = rat_str(sym.twist_degree);
    r["target_r1"] = to_ll(target.r1);
    r["target_degree"] = to_ll(target.degree);
    r["is_picard"] = target.is_picard;
    if (a == 1) {
        r["status"] = "PROPER";
        r["citation"] =
            "rank 1: the classical theta divisor is a proper subvariety of the Picard "
            "variety";
        r["note"] = "";
    } else {
        const ThetaReport report = theta_proper_status(s, a, flags);
        r["status"] = to_string(report.status);
        r["citation"] = report.citation;
        r["note"] = report.note;
    }
    return r;
}

std::vector<Record> run_sweep(const SweepSpec& spec) {
    std::vector<Record> rows;
    for (Int g = spec.g.lo; g <= spec.g.hi; ++g)
        for (Int e = spec.e.lo; e <= spec.e.hi; ++e)
            for (Int a = spec.a.lo; a <= spec.a.hi; ++a)
                for (Int b = spec.b.lo; b <= spec.b.hi; ++b) {
                    if (g < 0) {
                        Record r = skip_record(g, e, a, b, "invalid genus g < 0");
                        r["verdict"] = "ERROR";
                        rows.push_back(std::move(r));
                        continue;
                    }
                    if (e < -g) {
                        rows.push_back(skip_record(g, e, a, b, "nagata"));
                        continue;
                    }
                    const RuledSurface s(g, e);
                    if (!very_ample_necessary(s, {a, b})) {
                        rows.push_back(skip_record(g, e, a, b, "not_very_ample"));
                        continue;
                    }
                    try {
                        const Polarization h(s, {a, b}, false);
                        rows.push_back(verdict_record(s, h, spec.flags));
                    } catch (const std::invalid_argument& ex) {
                        Record r = skip_record(g, e, a, b, ex.what());
                        r["verdict"] = "ERROR";
                        rows.push_back(std::move(r));
                    } catch (const std::domain_error& ex) {
                        Record r = skip_record(g, e, a, b, ex.what());
                        r["verdict"] = "ERROR";
                        rows.push_back(std::move(r));
                    }
                }
    return rows;
}

std::string to_lines(const std::vector<Record>& records) {
    std::string out;
    for (const Record& r : records) {
        out += r.dump();
        out += '\n';
    }
    return out;
}

namespace {

std::string cell(const Record& r, const std::string& key) {
    if (!r.contains(key) || r[key].is_null()) return "-";
    const Record& v = r[key];
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        return s.empty() ? "-" : s;
    }
    if (key == "classes") {
        std::string s;
        for (const auto& cls : v) {
            if (!s.empty()) s += "+";
            s += "(" + cls[0].dump() + "," + cls[1].dump() + ")";
        }
        return s;
    }
    return v.dump();
}

} // namespace

std::string verdict_table(const std::vector<Record>& records) {
    const std::vector<std::string> keys = {"g",       "e",          "a",       "b",
                                           "verdict", "family_dim", "classes", "citation",
                                           "notes"};
    std::vector<std::vector<std::string>> grid;
    grid.push_back(keys);
    for (const Record& r : records) {
        std::vector<std::string> row;
        for (const auto& k : keys) row.push_back(cell(r, k));
        grid.push_back(std::move(row));
    }
    std::vector<std::size_t> width(keys.size(), 0);
    for (const auto& row : grid)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

} // namespace ruled
