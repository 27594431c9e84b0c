#include "blowup/runner.hpp"

#include <chrono>
#include <sstream>

#include "blowup/closure.hpp"
#include "blowup/parser.hpp"
#include "blowup/semigroup.hpp"

namespace blowup {

namespace {

using nlohmann::json;

Field make_field(const std::string& spec) {
    if (spec == "qq") return Field::rationals();
    if (spec.rfind("gf:", 0) == 0) return Field::prime(std::stoll(spec.substr(3)));
    throw ParseError("unknown field spec '" + spec + "' (use qq or gf:P)");
}

struct Env {
    Job job;
    Field fld = Field::rationals();
    RingPtr ring;
    SemigroupPtr semigroup;  // null for plain rings
    std::map<std::string, Ideal> ideals;
    std::map<std::string, std::shared_ptr<BlowupData>> blowups;
    ClosureOracle oracle;

    BlowupData& blowup_of(const std::string& name) {
        auto it = blowups.find(name);
        if (it != blowups.end()) return *it->second;
        auto bd = std::make_shared<BlowupData>(ideal_of(name));
        return *blowups.emplace(name, std::move(bd)).first->second;
    }
    const Ideal& ideal_of(const std::string& name) {
        auto it = ideals.find(name);
        if (it == ideals.end()) throw ParseError("unresolved ideal name '" + name + "'");
        return it->second;
    }
};

std::vector<std::string> print_ideal_gens(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.gens()) out.push_back(print_polynomial(g, *I.ring()));
    return out;
}

std::vector<std::string> print_reduced_basis(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.gb().canonical_elements()) out.push_back(print_polynomial(g, *I.ring()));
    return out;
}

json verdict_json(const Verdict& v) {
    json j;
    j["status"] = status_name(v.status);
    if (!v.witness.empty()) j["witness"] = v.witness;
    if (!v.notes.empty()) j["notes"] = v.notes;
    j["seed"] = v.seed;
    return j;
}

json depth_json(const DepthReport& d, const RingPtr& ring) {
    json j;
    j["dimension"] = d.dimension;
    j["depth_lower_bound"] = d.depthLowerBound;
    j["depth_exact"] = d.depthExact;
    j["is_cm"] = d.isCM;
    json forms = json::array();
    for (const auto& s : d.steps) {
        json f;
        f["form"] = print_polynomial(s.form, *ring);
        f["degree"] = s.degree;
        f["trial"] = s.trialIndex;
        forms.push_back(f);
    }
    j["regular_forms"] = forms;
    if (!d.socleWitness.empty()) j["socle_witness"] = d.socleWitness;
    if (!d.notes.empty()) j["notes"] = d.notes;
    j["seed"] = d.seed;
    j["trials_per_step"] = d.trialsPerStep;
    return j;
}

json census_json(const std::map<int, int>& census) {
    json j = json::object();
    for (const auto& [deg, cnt] : census) j[std::to_string(deg)] = cnt;
    return j;
}

json presentation_json(const GradedQuotientPresentation& pres) {
    json j;
    std::vector<std::string> rel;
    for (const auto& g : pres.relations.gens()) rel.push_back(print_polynomial(g, *pres.ring));
    j["relations"] = rel;
    j["census_by_t_degree"] = census_json(pres.censusByTDegree);
    j["base"] = pres.baseDescription;
    std::vector<std::string> tvars;
    for (int i : pres.tIndices) tvars.push_back(pres.ring->var_name(i));
    j["t_variables"] = tvars;
    j["note"] =
        "graded model of the local setting: power series rings are represented by positively "
        "graded rings; invariants agree for weighted-homogeneous inputs";
    return j;
}

json reduction_json(const ReductionData& rd, const RingPtr& ring) {
    json j;
    j["r"] = rd.r;
    j["kind"] = rd.kind;
    j["seed"] = rd.seed;
    j["homogeneous"] = rd.homogeneous;
    j["ideal_side_certified"] = rd.idealSideCertified;
    json census = json::object();
    for (const auto& [deg, c] : rd.fiberCensus) census[std::to_string(deg)] = c;
    j["artinian_fiber_census"] = census;
    std::vector<std::string> gens;
    for (const auto& a : rd.reductionGens) gens.push_back(print_polynomial(a, *ring));
    j["reduction_generators"] = gens;
    return j;
}

GradedQuotientPresentation presentation_for_target(Env& env, const AnalysisSpec& a) {
    std::string target = a.params.count("target") ? a.params.at("target") : "fiber";
    std::string iname = a.params.count("ideal") ? a.params.at("ideal") : "I";
    BlowupData& bd = env.blowup_of(iname);
    if (target == "fiber") return bd.special_fiber();
    if (target == "graded") return bd.associated_graded();
    if (target == "quotient_algebra") {
        const Ideal& K = env.ideal_of(a.params.at("K"));
        std::vector<int> modT;
        if (a.params.count("mod_t")) {
            std::istringstream ms(a.params.at("mod_t"));
            std::string name;
            while (std::getline(ms, name, ',')) {
                int idx = -1;
                for (std::size_t i = 0; i < bd.t_names().size(); ++i)
                    if (bd.t_names()[i] == name) idx = static_cast<int>(i);
                if (idx < 0) throw ParseError("unknown T variable '" + name + "' in mod_t");
                modT.push_back(idx);
            }
        }
        return bd.quotient_algebra(K, modT);
    }
    throw ParseError("unknown presentation target '" + target + "'");
}

long param_long(const AnalysisSpec& a, const std::string& key, long dflt = LONG_MIN) {
    auto it = a.params.find(key);
    if (it == a.params.end()) {
        if (dflt != LONG_MIN) return dflt;
        throw ParseError("analysis '" + a.name + "' requires parameter " + key);
    }
    return std::stol(it->second);
}

std::string param_str(const AnalysisSpec& a, const std::string& key, const char* dflt = nullptr) {
    auto it = a.params.find(key);
    if (it == a.params.end()) {
        if (dflt) return dflt;
        throw ParseError("analysis '" + a.name + "' requires parameter " + key);
    }
    return it->second;
}

json run_analysis(Env& env, const AnalysisSpec& a, std::uint64_t seed, int trials) {
    json out;
    const std::string iname = a.params.count("ideal") ? a.params.at("ideal") : "I";

    if (a.name == "invariants") {
        BlowupData& bd = env.blowup_of(iname);
        const Ideal& I = bd.ideal();
        out["mu"] = bd.mu();
        out["height"] = height(I);
        out["analytic_spread"] = bd.analytic_spread();
        out["dim_ring"] = ring_dimension(I.ring());
        out["dim_quotient"] = krull_dimension(I);
        std::vector<std::string> mg;
        for (const auto& f : bd.min_gens()) mg.push_back(print_polynomial(f, *I.ring()));
        out["minimal_generators"] = mg;
    } else if (a.name == "minimal_generators") {
        MinimalGenerators mg = minimal_generators(env.ideal_of(iname));
        std::vector<std::string> gens;
        for (const auto& g : mg.gens)
            gens.push_back(print_polynomial(g, *env.ideal_of(iname).ring()));
        out["generators"] = gens;
        json census = json::object();
        for (const auto& [deg, c] : mg.censusByDegree) census[std::to_string(deg)] = c;
        out["census_by_degree"] = census;
        out["mu"] = gens.size();
    } else if (a.name == "height") {
        out["height"] = height(env.ideal_of(iname));
    } else if (a.name == "hilbert") {
        HilbertSeries hs = hilbert_series(env.ideal_of(iname));
        out["dim"] = hs.dim;
        out["numerator"] = hs.numerator;
        std::vector<long> dw(hs.denomWeights.begin(), hs.denomWeights.end());
        out["denominator_weights"] = dw;
        out["reduced_numerator_at_one"] = hs.reducedNumeratorAtOne;
    } else if (a.name == "rees") {
        BlowupData& bd = env.blowup_of(iname);
        out["rees_relations"] = print_reduced_basis(bd.rees_ideal());
        out["ring"] = bd.rees_ring()->describe();
    } else if (a.name == "fiber") {
        BlowupData& bd = env.blowup_of(iname);
        const auto& F = bd.special_fiber();
        out = presentation_json(F);
        out["reduced_basis"] = print_reduced_basis(F.relations);
        out["analytic_spread"] = bd.analytic_spread();
    } else if (a.name == "graded") {
        BlowupData& bd = env.blowup_of(iname);
        const auto& G = bd.associated_graded();
        out = presentation_json(G);
        int dimG = krull_dimension(G.full_ideal());
        int dimR = ring_dimension(bd.ideal().ring());
        out["dim_G"] = dimG;
        out["dim_R"] = dimR;
        if (dimG != dimR)
            throw InvariantViolation("dim G != dim R on this instance (standard identity)");
    } else if (a.name == "quotient_algebra") {
        out = presentation_json(presentation_for_target(
            env, AnalysisSpec{a.name, [&] {
                                  auto p = a.params;
                                  p["target"] = "quotient_algebra";
                                  return p;
                              }()}));
    } else if (a.name == "analytic_spread") {
        out["analytic_spread"] = env.blowup_of(iname).analytic_spread();
    } else if (a.name == "reduction_number") {
        BlowupData& bd = env.blowup_of(iname);
        out = reduction_json(bd.reduction(seed, trials), bd.ideal().ring());
    } else if (a.name == "relation_census") {
        auto pres = presentation_for_target(env, a);
        out["census"] = census_json(relation_census(pres, static_cast<int>(param_long(a, "up_to"))));
    } else if (a.name == "linear_type") {
        BlowupData& bd = env.blowup_of(iname);
        bool lt = bd.is_linear_type();
        out["linear_type"] = lt;
        out["symmetric_contained_in_rees"] =
            bd.rees_ideal().contains_ideal(bd.symmetric_linear_part());
    } else if (a.name == "condition_a") {
        BlowupData& bd = env.blowup_of(iname);
        ConditionAReport rep = check_condition_a(bd, static_cast<int>(param_long(a, "t")), seed);
        json per = json::array();
        for (const auto& v : rep.perIndex) per.push_back(verdict_json(v));
        out["per_index"] = per;
        out["all_hold"] = rep.allHold();
        out["attempts"] = rep.attempts;
        std::vector<std::string> els;
        for (const auto& e : rep.elements) els.push_back(print_polynomial(e, *bd.ideal().ring()));
        out["general_elements"] = els;
    } else if (a.name == "lemma_propagation") {
        BlowupData& bd = env.blowup_of(iname);
        const ReductionData& red = bd.reduction(seed, trials);
        LemmaPropagationReport rep = verify_lemma_propagation(
            bd, red, static_cast<int>(param_long(a, "t")),
            static_cast<int>(param_long(a, "window", 3)));
        out["verdict"] = verdict_json(rep.overall);
        out["t"] = rep.t;
        out["window"] = rep.window;
        out["failures"] = rep.failures;
    } else if (a.name == "cm") {
        std::string target = param_str(a, "target", "fiber");
        if (target == "ring") {
            DepthReport d = cm_test(Ideal::zero(env.ring), derive_seed(seed, "cm_ring"), trials);
            out = depth_json(d, env.ring);
        } else if (target == "power") {
            Ideal Ij = ideal_power(env.ideal_of(iname), static_cast<int>(param_long(a, "j", 1)));
            DepthReport d = cm_test(Ij, derive_seed(seed, "cm_power"), trials);
            out = depth_json(d, env.ring);
        } else {
            auto pres = presentation_for_target(env, a);
            DepthReport d = cm_test(pres.full_ideal(), derive_seed(seed, "cm_" + target), trials);
            out = depth_json(d, pres.ring);
            out["target"] = target;
        }
    } else if (a.name == "main_theorem") {
        BlowupData& bd = env.blowup_of(iname);
        std::string kname = param_str(a, "K", "m");
        MainTheoremReport rep =
            check_main_theorem(bd, env.ideal_of(kname), static_cast<int>(param_long(a, "t")),
                               seed, trials);
        out["n"] = rep.n;
        out["ell"] = rep.ell;
        out["r"] = rep.r;
        out["t"] = rep.t;
        out["K_is_maximal"] = rep.kIsMaximal;
        out["hypotheses"] = status_name(rep.overall);
        json per = json::array();
        for (const auto& v : rep.conditionA.perIndex) per.push_back(verdict_json(v));
        out["condition_a"] = per;
        out["condition_b"] = verdict_json(rep.conditionB);
        out["census"] = census_json(rep.census);
        out["census_allowance"] = rep.censusAllowance;
        out["cm"] = depth_json(rep.cm, env.ring);
        if (!rep.notes.empty()) out["notes"] = rep.notes;
    } else if (a.name == "valabrega_valla") {
        BlowupData& bd = env.blowup_of(iname);
        ValabregaVallaReport rep =
            check_valabrega_valla_K(bd, env.ideal_of(param_str(a, "K", "m")), seed, trials);
        out["precondition"] = verdict_json(rep.precondition);
        out["i_cm"] = verdict_json(rep.cmVerdict);
        out["ii_freeness"] = verdict_json(rep.freeness);
        json inter = json::array();
        for (const auto& v : rep.intersections) inter.push_back(verdict_json(v));
        out["ii_intersections"] = inter;
        out["ii"] = verdict_json(rep.conditionII);
        out["equivalence_computed"] = rep.equivalenceComputed;
        out["equivalence_ok"] = rep.equivalenceOk;
        out["r"] = rep.r;
    } else if (a.name == "g_s") {
        out["verdict"] = verdict_json(check_G_s(env.ideal_of(iname),
                                                static_cast<int>(param_long(a, "s"))));
    } else if (a.name == "depth_powers") {
        DepthPowersReport rep = depth_powers(env.ideal_of(iname),
                                             static_cast<int>(param_long(a, "jmax")), seed, trials);
        json per = json::array();
        for (std::size_t j = 0; j < rep.perPower.size(); ++j) {
            json e = depth_json(rep.perPower[j], env.ring);
            e["corollary_inequality"] = static_cast<bool>(rep.corollaryInequality[j]);
            per.push_back(e);
        }
        out["per_power"] = per;
        out["dim_R_mod_I"] = rep.dimRmodI;
    } else if (a.name == "thm_g_cm") {
        BlowupData& bd = env.blowup_of(iname);
        ThmGCMReport rep = check_thm_G_CM(bd, seed, trials);
        out["d"] = rep.d;
        out["g"] = rep.g;
        out["r"] = rep.r;
        out["G_condition"] = verdict_json(rep.gCondition);
        out["depth_condition"] = verdict_json(rep.depthCondition);
        out["height_J_colon_I"] = verdict_json(rep.heightJI);
        json inter = json::array();
        for (const auto& v : rep.intersections) inter.push_back(verdict_json(v));
        out["ii_intersections"] = inter;
        out["ii"] = verdict_json(rep.conditionII);
        out["cm_G"] = depth_json(rep.cmG, env.ring);
        out["expected_reduction_number"] = rep.expectedReductionNumber;
        out["biconditional_computed"] = rep.biconditionalComputed;
        out["biconditional_ok"] = rep.biconditionalOk;
    } else if (a.name == "r_less_ell") {
        BlowupData& bd = env.blowup_of(iname);
        RLessEllReport rep = check_r_less_ell(bd, seed, trials);
        out["verdict"] = verdict_json(rep.overall);
        out["r"] = rep.r;
        out["ell"] = rep.ell;
        out["r_is_zero"] = rep.rIsZero;
        out["r_is_ell_minus_one"] = rep.rIsEllMinusOne;
    } else if (a.name == "fitting") {
        Ideal F = fitting_ideal(env.ideal_of(iname), static_cast<int>(param_long(a, "i")));
        out["generators"] = print_reduced_basis(F);
    } else if (a.name == "newton_closure") {
        Ideal C = newton_closure(env.ideal_of(iname));
        out["closure"] = print_reduced_basis(C);
        out["already_closed"] = C.equals(env.ideal_of(iname));
    } else if (a.name == "integrally_closed") {
        const Ideal& I = env.ideal_of(iname);
        int jmax = static_cast<int>(param_long(a, "jmax", 1));
        json per = json::array();
        for (int j = 1; j <= jmax; ++j) {
            Ideal Ij = ideal_power(I, j);
            auto cl = env.oracle.closure(Ij);
            Verdict v = !cl ? verdict(Status::NOT_CHECKED, "", seed, "no exact closure path")
                            : (Ij.equals(*cl) ? verdict(Status::HOLDS, "I^" + std::to_string(j) +
                                                                           " integrally closed")
                                              : verdict(Status::FAILS, "I^" + std::to_string(j) +
                                                                           " not closed"));
            per.push_back(verdict_json(v));
        }
        out["per_power"] = per;
    } else if (a.name == "closure_membership") {
        const Ideal& I = env.ideal_of(iname);
        Poly f = parse_polynomial(param_str(a, "f"), *I.ring());
        auto cert = closure_membership_bounded(f, I, static_cast<int>(param_long(a, "rmax", 6)));
        out["answer"] = cert ? "YES" : "UNKNOWN";
        if (cert) {
            out["reduction_exponent"] = cert->r;
            out["replay_ok"] = replay_certificate(*cert, I);
        }
    } else if (a.name == "kij_closed") {
        KIjClosedReport rep =
            check_KIj_closed(env.ideal_of(iname), env.ideal_of(param_str(a, "K", "m")),
                             static_cast<int>(param_long(a, "jmax", 1)), env.oracle);
        json per = json::array();
        for (const auto& v : rep.perPower) per.push_back(verdict_json(v));
        out["per_power"] = per;
        out["hypothesis_flags"] = rep.hypothesisFlags;
    } else if (a.name == "hubl_huneke") {
        BlowupData& bd = env.blowup_of(iname);
        HublHunekeReport rep =
            check_hubl_huneke(bd, static_cast<int>(param_long(a, "s", 1)),
                              static_cast<int>(param_long(a, "t", 1)), env.oracle, seed, trials);
        out["depth_R_positive"] = verdict_json(rep.depthRPositive);
        out["I_s_closed"] = verdict_json(rep.closedAtS);
        out["I_s_plus_t_closed"] = verdict_json(rep.closedAtSPlusT);
        out["depth_R_mod_I_s_zero"] = verdict_json(rep.depthZero);
        out["fiber_census_empty"] = verdict_json(rep.censusEmpty);
        out["conclusion_equality"] = verdict_json(rep.conclusionEquality);
        out["m_I_t_closed"] = verdict_json(rep.mItClosed);
        out["hypotheses_hold"] = rep.hypothesesHold;
        out["conclusion_implied"] = rep.conclusionImplied;
        if (!rep.notes.empty()) out["notes"] = rep.notes;
    } else if (a.name == "semigroup_basics") {
        if (!env.semigroup) throw ParseError("semigroup_basics requires a semigroup ring");
        out["generators"] = env.semigroup->gens();
        out["frobenius"] = env.semigroup->frobenius();
        out["conductor"] = env.semigroup->conductor();
        out["apery"] = env.semigroup->apery();
    } else {
        throw ParseError("unknown analysis name '" + a.name + "'");
    }
    return out;
}

std::string human_render(const json& machine) {
    std::ostringstream os;
    os << "blowup toolkit " << machine["version"].get<std::string>() << "\n";
    os << "field: " << machine["field"].get<std::string>() << "  seed: " << machine["seed"]
       << "\n";
    os << "ring: " << machine["ring"].get<std::string>() << "\n";
    os << std::string(72, '-') << "\n";
    for (const auto& [label, body] : machine["analyses"].items()) {
        os << label << ":\n";
        std::function<void(const json&, int)> render = [&](const json& j, int indent) {
            std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
            if (j.is_object()) {
                if (j.contains("status")) {
                    os << " " << j["status"].get<std::string>();
                    if (j.contains("witness"))
                        os << "  [" << j["witness"].get<std::string>() << "]";
                    if (j.contains("seed")) os << " [seed=" << j["seed"] << "]";
                    os << "\n";
                    return;
                }
                os << "\n";
                for (const auto& [k, v] : j.items()) {
                    os << pad << "  " << k << ":";
                    render(v, indent + 1);
                }
            } else if (j.is_array()) {
                os << "\n";
                for (const auto& v : j) {
                    os << pad << "  -";
                    render(v, indent + 1);
                }
            } else {
                os << " " << j.dump() << "\n";
            }
        };
        render(body, 0);
    }
    return os.str();
}

}  // namespace

std::string emit_machine(const json& machine) { return machine.dump(1, ' ') + "\n"; }

RunResult run_job(const Job& job) {
    RunResult result;
    Env env;
    env.job = job;
    env.fld = make_field(job.fieldSpec);

    // ring construction
    if (job.isSemigroup) {
        env.semigroup = std::make_shared<NumericalSemigroup>(job.semigroupGens);
        RingPtr toric = toric_presentation(env.semigroup, env.fld);
        if (!job.adjoinVars.empty()) {
            env.ring = toric->extended(job.adjoinVars,
                                       std::vector<long>(job.adjoinVars.size(), 1));
        } else {
            env.ring = toric;
        }
        // valuation closure through the exponent dictionary (t^e <-> any
        // monomial of weighted degree e)
        SemigroupPtr S = env.semigroup;
        RingPtr ring = env.ring;
        bool plainToric = job.adjoinVars.empty();
        env.oracle.closure = [S, ring, plainToric](const Ideal& J) -> std::optional<Ideal> {
            if (!plainToric) return std::nullopt;
            std::vector<long> exps;
            for (const auto& g : J.gens()) {
                if (g.nterms() != 1) return std::nullopt;
                exps.push_back(g.lt().m.weighted_degree(ring->weights()));
            }
            SemigroupIdeal A = semigroup_ideal(S, std::move(exps));
            return lift_to_toric(sg_closure(A), ring);
        };
    } else {
        if (job.ringVars.empty()) throw ParseError("ring has no variables");
        std::vector<long> w = job.ringWeights;
        if (w.empty()) w.assign(job.ringVars.size(), 1);
        std::vector<std::string> vars = job.ringVars;
        for (const auto& v : job.adjoinVars) {
            vars.push_back(v);
            w.push_back(1);
        }
        RingPtr free = PresentedRing::polynomial(vars, env.fld, w);
        if (job.relationTexts.empty()) {
            env.ring = free;
        } else {
            std::vector<Poly> rel;
            for (const auto& rt : job.relationTexts) rel.push_back(parse_polynomial(rt, *free));
            // relations are trusted to present a domain only when the caller
            // says so; keep the flag off for explicit presentations
            env.ring = PresentedRing::presented(vars, env.fld, w, rel, true);
        }
        env.oracle = ClosureOracle::newton();
    }

    // ideals; "m" defaults to the maximal ideal unless redefined
    env.ideals.emplace("m", Ideal::maximal(env.ring));
    for (const auto& spec : job.ideals) {
        Ideal I;
        switch (spec.kind) {
            case IdealSpec::Kind::gens: {
                std::vector<Poly> gens;
                for (const auto& t : spec.genTexts) gens.push_back(parse_polynomial(t, *env.ring));
                I = Ideal(env.ring, std::move(gens));
                break;
            }
            case IdealSpec::Kind::exponents: {
                if (!env.semigroup)
                    throw ParseError("ideal '" + spec.name +
                                     "': exponents require a semigroup ring");
                std::vector<Poly> gens;
                for (long e : spec.exponents) {
                    // factor through the pure toric coordinates
                    RingPtr toricBase = env.ring;
                    gens.push_back(toric_monomial(env.semigroup, env.ring, e));
                }
                for (const auto& v : spec.plusVars) {
                    int idx = env.ring->var_index(v);
                    if (idx < 0)
                        throw ParseError("ideal '" + spec.name + "': unknown variable '" + v + "'");
                    gens.push_back(env.ring->var(idx));
                }
                I = Ideal(env.ring, std::move(gens));
                break;
            }
            case IdealSpec::Kind::minors: {
                std::vector<std::vector<Poly>> mat;
                for (const auto& row : spec.matrix) {
                    std::vector<Poly> r;
                    for (const auto& e : row) r.push_back(parse_polynomial(e, *env.ring));
                    mat.push_back(std::move(r));
                }
                if (spec.hilbertBurch) {
                    // f_i = (-1)^{i+1} * minor(rows \ {i}); the numbering that
                    // matches the row-deletion presentation of an (n+1) x n
                    // matrix of syzygies
                    if (mat.empty() || mat.size() != mat[0].size() + 1 ||
                        spec.minorSize != static_cast<int>(mat[0].size()))
                        throw ParseError("hilbert-burch minors need an (n+1) x n matrix, size n");
                    std::vector<Poly> gens;
                    const Field& fld = env.ring->field();
                    for (std::size_t del = 0; del < mat.size(); ++del) {
                        std::vector<std::vector<Poly>> sub;
                        for (std::size_t r = 0; r < mat.size(); ++r)
                            if (r != del) sub.push_back(mat[r]);
                        Ideal one = minors_ideal(env.ring, sub, spec.minorSize);
                        Poly det = one.gens().empty() ? Poly{} : one.gens()[0];
                        gens.push_back(del % 2 == 0 ? det : poly_neg(det, fld));
                    }
                    I = Ideal(env.ring, std::move(gens));
                } else {
                    I = minors_ideal(env.ring, mat, spec.minorSize);
                }
                break;
            }
            case IdealSpec::Kind::fitting:
                I = fitting_ideal(env.ideal_of(spec.fittingOf), spec.fittingIndex);
                break;
            case IdealSpec::Kind::maximal:
                I = Ideal::maximal(env.ring);
                break;
        }
        env.ideals.insert_or_assign(spec.name, std::move(I));
    }

    // report skeleton
    json machine;
    machine["version"] = kToolkitVersion;
    machine["field"] = env.fld.describe();
    machine["seed"] = job.seed;
    machine["ring"] = env.ring->describe();
    json idealEcho = json::object();
    for (const auto& [name, I] : env.ideals) idealEcho[name] = print_ideal_gens(I);
    machine["ideals"] = idealEcho;

    json analyses = json::object();
    int index = 0;
    for (const auto& a : job.analyses) {
        char label[64];
        std::snprintf(label, sizeof label, "%02d_%s", index++, a.name.c_str());
        std::uint64_t aseed = derive_seed(job.seed, label);
        try {
            analyses[label] = run_analysis(env, a, aseed, job.trials);
            analyses[label]["analysis_status"] = "completed";
        } catch (const BudgetExceeded& e) {
            json j;
            j["analysis_status"] = "budget-exceeded";
            j["error"] = e.what();
            analyses[label] = j;
            result.exitCode = 3;
        }
    }
    machine["analyses"] = analyses;
    machine["analyses_requested"] = job.analyses.size();
    machine["analyses_reported"] = analyses.size();

    result.machine = machine;
    result.human = human_render(machine);
    return result;
}

}  // namespace blowup
