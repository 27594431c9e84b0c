#include "blowup/blowup_algebras.hpp"

#include <algorithm>

namespace blowup {

namespace {

// standard monomials of an Artinian quotient, tallied by total degree;
// nullopt when some variable has no pure power among the leading terms
std::optional<std::map<int, long>> artinian_census(const std::vector<Monomial>& lt,
                                                   std::size_t nvars) {
    std::vector<int> bound(nvars, -1);
    for (const auto& m : lt) {
        int nz = -1;
        bool pure = true;
        for (std::size_t i = 0; i < nvars; ++i) {
            if (m.e[i] == 0) continue;
            if (nz >= 0) {
                pure = false;
                break;
            }
            nz = static_cast<int>(i);
        }
        if (m.is_one()) return std::map<int, long>{};  // unit ideal: zero ring
        if (pure && nz >= 0 && (bound[nz] < 0 || m.e[nz] < bound[nz])) bound[nz] = m.e[nz];
    }
    for (std::size_t i = 0; i < nvars; ++i)
        if (bound[i] < 0) return std::nullopt;

    std::map<int, long> census;
    Monomial cur(nvars);
    auto divisible = [&](const Monomial& m) {
        for (const auto& g : lt)
            if (mono_divides(g, m)) return true;
        return false;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == nvars) {
            if (!divisible(cur)) census[static_cast<int>(cur.total_degree())]++;
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            cur.e[i] = e;
            self(self, i + 1);
        }
        cur.e[i] = 0;
    };
    rec(rec, 0);
    return census;
}

}  // namespace

BlowupData::BlowupData(Ideal I) : ideal_(std::move(I)), reesIdeal_(), fiber_(), graded_() {
    if (!ideal_.ring()->is_domain())
        throw std::domain_error("blowup algebras require the ambient ring's domain flag");
    MinimalGenerators mg = minimal_generators(ideal_);
    minGens_ = std::move(mg.gens);
    if (minGens_.empty()) throw std::domain_error("blowup algebras of the zero ideal");

    const RingPtr& ring = ideal_.ring();
    Grading g = ring->grading();
    for (const char* prefix : {"T", "TT", "U@"}) {
        tNames_.clear();
        bool ok = true;
        for (int i = 1; i <= mu(); ++i) {
            std::string name = std::string(prefix) + std::to_string(i);
            if (ring->var_index(name) >= 0) ok = false;
            tNames_.push_back(name);
        }
        if (ok) break;
    }
    for (const auto& f : minGens_) foldedTWeights_.push_back(weighted_degree_max(f, g) + 1);
}

void BlowupData::build_rees() {
    if (reesIdeal_) return;
    const RingPtr& ring = ideal_.ring();
    const Field& fld = ring->field();
    const std::size_t nx = ring->nvars();
    const int n = mu();

    std::vector<std::string> extNames{"@t"};
    std::vector<long> extW{1};
    for (int i = 0; i < n; ++i) {
        extNames.push_back(tNames_[i]);
        extW.push_back(foldedTWeights_[i]);
    }
    RingPtr elim = ring->extended(extNames, extW);
    const MonomialOrder& eord = elim->grevlex();
    std::vector<int> embed(nx);
    for (std::size_t i = 0; i < nx; ++i) embed[i] = static_cast<int>(i);

    Poly t = elim->var(static_cast<int>(nx));
    std::vector<Poly> gens;
    for (int i = 0; i < n; ++i) {
        Poly Ti = elim->var(static_cast<int>(nx) + 1 + i);
        Poly tf = poly_mul(t, poly_embed(minGens_[i], embed, elim->nvars(), fld, eord), fld, eord);
        gens.push_back(poly_sub(Ti, tf, fld, eord));
    }

    reesRing_ = ring->extended(tNames_, foldedTWeights_);
    Ideal E(elim, std::move(gens));
    reesIdeal_ = ideal_eliminate(E, {static_cast<int>(nx)}, reesRing_);

    std::vector<std::string> fNames = tNames_;
    fiberRing_ = PresentedRing::polynomial(std::move(fNames), fld, std::vector<long>(n, 1));
}

const RingPtr& BlowupData::rees_ring() {
    build_rees();
    return reesRing_;
}

const Ideal& BlowupData::rees_ideal() {
    build_rees();
    return *reesIdeal_;
}

const RingPtr& BlowupData::fiber_ring() {
    build_rees();
    return fiberRing_;
}

GradedQuotientPresentation BlowupData::make_presentation(RingPtr presRing,
                                                         std::vector<Poly> qGens,
                                                         std::vector<int> tIdx,
                                                         std::string baseDesc) {
    MinimalGenerators mg = minimal_generators(Ideal(presRing, std::move(qGens)));
    GradedQuotientPresentation pres{presRing,
                                    tIdx,
                                    Ideal(presRing, mg.gens),
                                    {},
                                    Grading{std::vector<long>(presRing->nvars(), 0)},
                                    std::move(baseDesc)};
    for (int i : tIdx) pres.tGrading.weights[i] = 1;
    for (const auto& q : mg.gens) pres.censusByTDegree[pres.t_degree(q)]++;
    return pres;
}

const GradedQuotientPresentation& BlowupData::special_fiber() {
    if (fiber_) return *fiber_;
    build_rees();
    const RingPtr& ring = ideal_.ring();
    const Field& fld = ring->field();
    const std::size_t nx = ring->nvars();
    const int n = mu();

    // kill the base variables: images of the Rees relations generate Q
    std::vector<Poly> images;
    for (std::size_t i = 0; i < nx; ++i) images.push_back(Poly{});
    for (int i = 0; i < n; ++i) images.push_back(fiberRing_->var(i));
    std::vector<Poly> qGens;
    for (const auto& g : reesIdeal_->gb().elements) {
        Poly q = poly_apply_map(poly_resort(g, reesRing_->grevlex()), images, fld, n,
                                fiberRing_->grevlex());
        if (!q.is_zero()) qGens.push_back(q);
    }
    std::vector<int> tIdx(n);
    for (int i = 0; i < n; ++i) tIdx[i] = i;
    fiber_ = make_presentation(fiberRing_, std::move(qGens), std::move(tIdx), "k");
    return *fiber_;
}

Ideal BlowupData::fiber_ideal_direct() {
    // Q = (A + m*B) n k[T], by block elimination of the base variables — an
    // independent route to the fiber relations (path A substitutes x -> 0
    // into the reduced Rees basis and minimalizes).
    build_rees();
    const RingPtr& ring = ideal_.ring();
    const std::size_t nx = ring->nvars();
    std::vector<Poly> gens = reesIdeal_->gens();
    std::vector<int> drop;
    for (std::size_t i = 0; i < nx; ++i) {
        gens.push_back(reesRing_->var(static_cast<int>(i)));
        drop.push_back(static_cast<int>(i));
    }
    Ideal full(reesRing_, std::move(gens));
    return ideal_eliminate_free(full, drop, fiberRing_);
}

const GradedQuotientPresentation& BlowupData::associated_graded() {
    if (graded_) return *graded_;
    build_rees();
    const RingPtr& ring = ideal_.ring();
    const std::size_t nx = ring->nvars();
    const int n = mu();

    std::vector<int> embed(nx);
    for (std::size_t i = 0; i < nx; ++i) embed[i] = static_cast<int>(i);
    std::vector<Poly> baseRel;
    for (const auto& r : ring->relations())
        baseRel.push_back(
            poly_embed(r, embed, reesRing_->nvars(), ring->field(), reesRing_->grevlex()));
    for (const auto& f : minGens_)
        baseRel.push_back(
            poly_embed(f, embed, reesRing_->nvars(), ring->field(), reesRing_->grevlex()));
    RingPtr presRing = PresentedRing::presented(reesRing_->var_names(), ring->field(),
                                                reesRing_->weights(), std::move(baseRel), false);
    std::vector<int> tIdx(n);
    for (int i = 0; i < n; ++i) tIdx[i] = static_cast<int>(nx) + i;
    graded_ = make_presentation(presRing, reesIdeal_->gens(), std::move(tIdx), "R/I");
    return *graded_;
}

GradedQuotientPresentation BlowupData::quotient_algebra(const Ideal& K,
                                                        const std::vector<int>& modOutT) {
    build_rees();
    const RingPtr& ring = ideal_.ring();
    if (!same_ring(*K.ring(), *ring))
        throw std::invalid_argument("quotient_algebra: K lives in a different ring");
    if (krull_dimension(K) != 0)
        throw std::domain_error("quotient_algebra requires an m-primary ideal K");
    const std::size_t nx = ring->nvars();
    const int n = mu();

    std::vector<int> embed(nx);
    for (std::size_t i = 0; i < nx; ++i) embed[i] = static_cast<int>(i);
    std::vector<Poly> baseRel;
    for (const auto& r : ring->relations())
        baseRel.push_back(
            poly_embed(r, embed, reesRing_->nvars(), ring->field(), reesRing_->grevlex()));
    for (const auto& g : K.gens())
        baseRel.push_back(
            poly_embed(g, embed, reesRing_->nvars(), ring->field(), reesRing_->grevlex()));
    RingPtr presRing = PresentedRing::presented(reesRing_->var_names(), ring->field(),
                                                reesRing_->weights(), std::move(baseRel), false);
    std::vector<Poly> qGens = reesIdeal_->gens();
    for (int i : modOutT) {
        if (i < 0 || i >= n) throw std::invalid_argument("modOutT index out of range");
        qGens.push_back(presRing->var(static_cast<int>(nx) + i));
    }
    std::vector<int> tIdx(n);
    for (int i = 0; i < n; ++i) tIdx[i] = static_cast<int>(nx) + i;
    return make_presentation(presRing, std::move(qGens), std::move(tIdx), "R/K");
}

int BlowupData::analytic_spread() { return krull_dimension(special_fiber().full_ideal()); }

ReductionData BlowupData::reduction_with_generators(int s, std::uint64_t seed, int trials) {
    const GradedQuotientPresentation& F = special_fiber();
    const Field& fld = fiberRing_->field();
    const int n = mu();
    if (s < analytic_spread())
        throw std::invalid_argument("reduction needs at least analytic-spread many generators");

    ReductionData best;
    auto consider = [&](const std::vector<std::vector<Scalar>>& coeff, const std::string& kind) {
        std::vector<Poly> lambdas;
        for (int i = 0; i < s; ++i) {
            Poly l;
            for (int j = 0; j < n; ++j) {
                if (fld.is_zero(coeff[i][j])) continue;
                l = poly_add(l, poly_scale(fiberRing_->var(j), coeff[i][j], fld), fld,
                             fiberRing_->grevlex());
            }
            lambdas.push_back(l);
        }
        std::vector<Poly> cGens = F.relations.gens();
        cGens.insert(cGens.end(), lambdas.begin(), lambdas.end());
        Ideal C(fiberRing_, std::move(cGens));
        auto census = artinian_census(leading_term_ideal(C.gb()), fiberRing_->nvars());
        if (!census) return;  // not a reduction (fiber not Artinian): skip this draw
        int r = 0;
        for (const auto& [deg, cnt] : *census)
            if (cnt > 0) r = std::max(r, deg);
        if (best.r >= 0 && r >= best.r) return;

        best.kind = kind;
        best.coeff = coeff;
        best.fiberForms = lambdas;
        best.r = r;
        best.fiberCensus = *census;
        best.reductionGens.clear();
        const MonomialOrder& ord = ideal_.ring()->grevlex();
        for (int i = 0; i < s; ++i) {
            Poly a;
            for (int j = 0; j < n; ++j)
                a = poly_add(a, poly_scale(minGens_[j], coeff[i][j], fld), fld, ord);
            best.reductionGens.push_back(a);
        }
    };

    // coordinate subsets (lexicographic), capped
    if (s <= n) {
        std::vector<int> sel(s);
        int emitted = 0;
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (emitted >= 64) return;
            if (depth == s) {
                ++emitted;
                std::vector<std::vector<Scalar>> c(s, std::vector<Scalar>(n, fld.zero()));
                std::string kind = "coordinate:";
                for (int i = 0; i < s; ++i) {
                    c[i][sel[i]] = fld.one();
                    kind += (i ? "," : "") + std::to_string(sel[i] + 1);
                }
                consider(c, kind);
                return;
            }
            for (int j = start; j <= n - (s - depth); ++j) {
                sel[depth] = j;
                self(self, j + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }

    Rng rng(derive_seed(seed, "reduction"));
    for (int tr = 0; tr < trials; ++tr) {
        std::vector<std::vector<Scalar>> c(s, std::vector<Scalar>(n, fld.zero()));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < n; ++j) c[i][j] = rng.scalar(fld);
        consider(c, "random:#" + std::to_string(tr));
        best.trialsRun++;
    }
    if (best.r < 0)
        throw std::domain_error("no Artinian reduction found; analytic spread computation suspect");
    best.seed = seed;

    Grading g = ideal_.ring()->grading();
    best.homogeneous = true;
    for (const auto& a : best.reductionGens)
        if (multidegree(a, g).status == MultiDegree::Status::mixed) best.homogeneous = false;

    // For equigenerated homogeneous ideals the fiber reduction number and
    // the global one coincide by graded Nakayama; certify it.
    bool equigenerated = true;
    long d0 = weighted_degree_max(minGens_[0], g);
    for (const auto& f : minGens_)
        if (weighted_degree_max(f, g) != d0) equigenerated = false;
    if (equigenerated) {
        Ideal J(ideal_.ring(), best.reductionGens);
        Ideal lhs = ideal_power(ideal_, best.r + 1);
        Ideal rhs = ideal_product(J, ideal_power(ideal_, best.r));
        if (!lhs.equals(rhs))
            throw InvariantViolation("fiber reduction number disagrees with I^{r+1} = J I^r");
        if (best.r >= 1 &&
            ideal_power(ideal_, best.r).equals(ideal_product(J, ideal_power(ideal_, best.r - 1))))
            throw InvariantViolation("fiber reduction number is not minimal on the ideal side");
        best.idealSideCertified = true;
    }
    return best;
}

const ReductionData& BlowupData::reduction(std::uint64_t seed, int trials) {
    auto key = std::make_pair(seed, trials);
    auto it = reductionCache_.find(key);
    if (it != reductionCache_.end()) return it->second;
    ReductionData rd = reduction_with_generators(analytic_spread(), seed, trials);
    return reductionCache_.emplace(key, std::move(rd)).first->second;
}

const Ideal& BlowupData::symmetric_linear_part() {
    if (symLinear_) return *symLinear_;
    build_rees();
    const RingPtr& ring = ideal_.ring();
    const Field& fld = ring->field();
    const std::size_t nx = ring->nvars();
    PresentationMatrix M = syzygy_matrix(ring, minGens_);
    std::vector<int> embed(nx);
    for (std::size_t i = 0; i < nx; ++i) embed[i] = static_cast<int>(i);
    std::vector<Poly> gens;
    for (const auto& col : M.columns) {
        Poly form;
        for (std::size_t i = 0; i < col.size(); ++i) {
            Poly e = poly_embed(col[i], embed, reesRing_->nvars(), fld, reesRing_->grevlex());
            form = poly_add(form,
                            poly_mul(e, reesRing_->var(static_cast<int>(nx + i)), fld,
                                     reesRing_->grevlex()),
                            fld, reesRing_->grevlex());
        }
        if (!form.is_zero()) gens.push_back(form);
    }
    symLinear_ = Ideal(reesRing_, std::move(gens));
    return *symLinear_;
}

bool BlowupData::is_linear_type() { return symmetric_linear_part().equals(rees_ideal()); }

std::map<int, int> relation_census(const GradedQuotientPresentation& pres, int upTo) {
    std::map<int, int> out;
    for (const auto& [deg, cnt] : pres.censusByTDegree)
        if (deg <= upTo) out[deg] = cnt;
    return out;
}

}  // namespace blowup
