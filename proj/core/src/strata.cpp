#include "kummer/strata/strata.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "kummer/error.hpp"
#include "kummer/exactalg/cyclotomic.hpp"
#include "kummer/exactalg/smith.hpp"
#include "kummer/repring/molien.hpp"
#include "kummer/toruslat/fixed_locus.hpp"

namespace kummer {

IntMatrix induced_lattice_action(const IntMatrix& g, const IntMatrix& basis) {
    const std::size_t k = basis.cols();
    if (k == 0) return IntMatrix(0, 0);
    const auto snf = smith_normal_form(basis);
    if (snf.rank() != k || snf.nonzero_product() != 1)
        throw Error(ErrorCode::InvalidInput, "lattice basis is not saturated");
    // B = U^-1 [I; 0] V^-1, so V [I 0] U is a left inverse.
    const IntMatrix left = snf.V * snf.U.row_block(0, k);
    const IntMatrix image = g * basis;
    IntMatrix x = left * image;
    if (basis * x != image) throw Error(ErrorCode::InvalidInput, "lattice is not stable under the matrix");
    return x;
}

namespace {

struct Flat {
    AffineSubtorus locus;
    Subgroup isotropy;
};

/// Every component of every fixed locus, tagged with its generic isotropy.
class FlatPoset {
public:
    FlatPoset(const IntegralAction& action, const SubgroupClassPoset& poset) : action_(action) {
        const auto& group = action.group();
        const unsigned copies = 2 * action.d();
        for (const auto& h : poset.all_subgroups()) {
            const auto comps = fix_locus_torus(action, h);
            std::vector<boost::dynamic_bitset<>> masks;
            for (const auto& c : comps) {
                boost::dynamic_bitset<> m(group.order());
                for (std::size_t g = 0; g < group.order(); ++g)
                    if (c.fixed_pointwise_by(action.matrix(g))) m.set(g);
                masks.push_back(std::move(m));
            }
            // Odometer over 2d-tuples of torus components.
            std::vector<std::size_t> idx(copies, 0);
            while (true) {
                auto mask = masks[idx[0]];
                for (unsigned j = 1; j < copies; ++j) mask &= masks[idx[j]];
                if (mask == h.mask()) {
                    std::vector<TorusCoset> factors;
                    for (auto i : idx) factors.push_back(comps[i]);
                    flats_.push_back({AffineSubtorus(std::move(factors)), h});
                }
                unsigned j = 0;
                while (j < copies && ++idx[j] == comps.size()) idx[j++] = 0;
                if (j == copies) break;
            }
        }
        std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
            return std::forward_as_tuple(a.locus.lattice_rank(), a.locus) <
                   std::forward_as_tuple(b.locus.lattice_rank(), b.locus);
        });
        std::map<AffineSubtorus, std::size_t> index;
        for (std::size_t f = 0; f < flats_.size(); ++f) index.emplace(flats_[f].locus, f);

        image_.assign(group.order(), std::vector<std::size_t>(flats_.size()));
        for (std::size_t g = 0; g < group.order(); ++g) {
            const IntMatrix& m = action.matrix(g);
            const IntMatrix& minv = action.matrix(group.inverse(g));
            for (std::size_t f = 0; f < flats_.size(); ++f) {
                const auto it = index.find(flats_[f].locus.act(m, minv));
                if (it == index.end()) throw Error(ErrorCode::InvalidInput, "fixed-locus components not closed under G");
                image_[g][f] = it->second;
            }
        }

        below_.resize(flats_.size());
        for (std::size_t f = 0; f < flats_.size(); ++f)
            for (std::size_t s = 0; s < f; ++s)
                if (flats_[s].locus.lattice_rank() < flats_[f].locus.lattice_rank() &&
                    flats_[f].locus.contains(flats_[s].locus))
                    below_[f].push_back(s);
        memo_.assign(group.order() * flats_.size(), std::nullopt);
    }

    std::size_t size() const { return flats_.size(); }
    const Flat& operator[](std::size_t f) const { return flats_[f]; }
    std::size_t image(std::size_t g, std::size_t f) const { return image_[g][f]; }
    const std::vector<std::size_t>& below(std::size_t f) const { return below_[f]; }

    Subgroup stabilizer(std::size_t f) const {
        std::vector<std::size_t> out;
        for (std::size_t g = 0; g < image_.size(); ++g)
            if (image_[g][f] == f) out.push_back(g);
        return Subgroup(std::move(out), image_.size());
    }

    /// Lefschetz series of g on the compactly supported cohomology of the open
    /// part of flat f (f minus everything strictly below it); g must stabilize f.
    const IntPolynomial& open_trace(std::size_t g, std::size_t f) {
        auto& slot = memo_[g * flats_.size() + f];
        if (slot) return *slot;
        const IntMatrix eta = induced_lattice_action(action_.matrix(g), flats_[f].locus.lattice());
        IntPolynomial value = eta.rows() == 0 ? IntPolynomial::constant(1) : det_one_plus_t(eta).pow(2 * action_.d());
        for (auto s : below_[f])
            if (image_[g][s] == s) value -= open_trace(g, s);
        slot = std::move(value);
        return *slot;
    }

private:
    const IntegralAction& action_;
    std::vector<Flat> flats_;
    std::vector<std::vector<std::size_t>> image_;
    std::vector<std::vector<std::size_t>> below_;
    std::vector<std::optional<IntPolynomial>> memo_;
};

Stratum build_stratum(const IntegralAction& action, const SubgroupClassPoset& poset, FlatPoset& flats,
                      std::size_t f, std::size_t orbit_size) {
    const auto& group = action.group();
    Stratum s;
    s.isotropy = flats[f].isotropy;
    s.isotropy_class = poset.class_index_of(s.isotropy);
    s.representative = flats[f].locus;
    s.orbit_size = orbit_size;
    s.stabilizer = flats.stabilizer(f);
    s.weyl = quotient_group(group, s.stabilizer, s.isotropy);
    for (auto w : s.weyl.lift)
        s.eta.push_back(induced_lattice_action(action.matrix(w), s.representative.lattice()));
    s.fiber = fiber_poincare_equivariant(action, s.isotropy, s.stabilizer);

    const auto& below = flats.below(f);
    for (auto b : below) {
        const bool covered = std::any_of(below.begin(), below.end(), [&](std::size_t c) {
            const auto& under = flats.below(c);
            return std::binary_search(under.begin(), under.end(), b);
        });
        if (!covered) s.deeper.push_back(flats[b].locus);
    }

    s.closure_quotient = molien_average(s.eta, action.d());
    IntPolynomial open, weighted;
    for (std::size_t w = 0; w < s.weyl.lift.size(); ++w) {
        const IntPolynomial& trace = flats.open_trace(s.weyl.lift[w], f);
        open += trace;
        weighted += trace * (*s.fiber.equivariant)(w);
    }
    const auto w_order = static_cast<std::int64_t>(s.weyl.lift.size());
    s.open_virtual = open.divide_exact(w_order);
    s.open_weighted = weighted.divide_exact(w_order);
    return s;
}

} // namespace

StrataReport stratify(const IntegralAction& action) {
    const auto& group = action.group();
    const SubgroupClassPoset poset(group);
    FlatPoset flats(action, poset);

    StrataReport report;
    report.flat_count = flats.size();

    // Orbits, with the smallest flat of each orbit as representative.
    std::vector<std::ptrdiff_t> orbit_of(flats.size(), -1);
    std::vector<std::size_t> reps;
    std::vector<std::size_t> sizes;
    for (std::size_t f = 0; f < flats.size(); ++f) {
        if (orbit_of[f] >= 0) continue;
        std::size_t count = 0;
        for (std::size_t g = 0; g < group.order(); ++g) {
            const auto img = flats.image(g, f);
            if (orbit_of[img] < 0) {
                orbit_of[img] = static_cast<std::ptrdiff_t>(reps.size());
                ++count;
            }
        }
        reps.push_back(f);
        sizes.push_back(count);
    }

    std::vector<Stratum> built;
    for (std::size_t o = 0; o < reps.size(); ++o) built.push_back(build_stratum(action, poset, flats, reps[o], sizes[o]));

    std::vector<std::size_t> order(built.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = built[a];
        const auto& y = built[b];
        if (x.lattice_rank() != y.lattice_rank()) return x.lattice_rank() > y.lattice_rank();
        return x.isotropy_class < y.isotropy_class;
    });
    std::vector<std::size_t> position(built.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    for (auto o : order) report.strata.push_back(std::move(built[o]));

    for (std::size_t o = 0; o < reps.size(); ++o) {
        std::vector<std::size_t> inside;
        for (auto b : flats.below(reps[o])) inside.push_back(position[static_cast<std::size_t>(orbit_of[b])]);
        std::sort(inside.begin(), inside.end());
        inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
        for (auto i : inside) report.closure_edges.emplace_back(i, position[o]);
    }
    std::sort(report.closure_edges.begin(), report.closure_edges.end());

    for (std::size_t i = 0; i < report.strata.size(); ++i) {
        const auto& s = report.strata[i];
        auto it = std::find_if(report.classes.begin(), report.classes.end(),
                               [&](const IsotropyClassSummary& c) { return c.isotropy_class == s.isotropy_class; });
        if (it == report.classes.end()) {
            IsotropyClassSummary c;
            c.isotropy_class = s.isotropy_class;
            c.isotropy_order = s.isotropy.order();
            c.dimension = s.dimension();
            c.weyl_order = poset[s.isotropy_class].weyl_order();
            c.fiber = s.fiber.plain;
            report.classes.push_back(std::move(c));
            it = std::prev(report.classes.end());
        }
        it->components_upstairs += s.orbit_size;
        it->components_downstairs += 1;
        it->open_virtual += s.open_virtual;
        it->open_weighted += s.open_weighted;
        it->strata.push_back(i);
        report.quotient += s.open_virtual;
        report.resolution += s.open_weighted;
    }

    // Independent path: every flat with its full stabilizer, averaged over G.
    IntPolynomial total;
    for (std::size_t f = 0; f < flats.size(); ++f) {
        const Subgroup stab = flats.stabilizer(f);
        const auto classes = weyl_action_on_classes(group, flats[f].isotropy, stab);
        for (auto g : stab.elements()) total += flats.open_trace(g, f) * fiber_trace(action, classes, g);
    }
    report.resolution_frobenius = total.divide_exact(static_cast<std::int64_t>(group.order()));
    return report;
}

IntPolynomial assemble_resolution_poincare(const IntegralAction& action) { return stratify(action).resolution; }

} // namespace kummer
