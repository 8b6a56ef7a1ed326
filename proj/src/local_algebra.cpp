#include "qtype/local_algebra.hpp"

#include "qtype/errors.hpp"
#include "qtype/matrix.hpp"
#include "qtype/parallel.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <tuple>

namespace qtype {

IdealPresentation::IdealPresentation(int nvars, std::vector<PolyC> generators,
                                     std::vector<GaussianRational> base_point)
    : nvars_(nvars), base_point_(std::move(base_point))
{
    if (nvars <= 0)
        throw Error(ErrorCode::invalid_argument, "an ideal needs at least one variable");
    if (generators.empty())
        throw Error(ErrorCode::invalid_argument, "an ideal needs at least one generator");
    if (base_point_.empty())
        base_point_.assign(static_cast<std::size_t>(nvars), GaussianRational());
    if (static_cast<int>(base_point_.size()) != nvars)
        throw Error(ErrorCode::arity_mismatch, "base point has wrong dimension");
    generators_.reserve(generators.size());
    for (auto& g : generators) {
        if (g.nvars() != nvars)
            throw Error(ErrorCode::arity_mismatch, "generator arity differs from the ideal");
        PolyC centred = translate(g, base_point_);
        if (!centred.constant_term().is_zero())
            throw Error(ErrorCode::improper_ideal,
                        "generator " + g.to_string() + " does not vanish at the base point");
        generators_.push_back(std::move(centred));
    }
}

IdealPresentation::IdealPresentation(std::vector<PolyC> generators)
    : IdealPresentation(generators.empty() ? 1 : generators.front().nvars(), std::move(generators))
{
}

bool IdealPresentation::at_origin() const
{
    return std::all_of(base_point_.begin(), base_point_.end(), [](const auto& c) { return c.is_zero(); });
}

bool IdealPresentation::all_monomial() const
{
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const PolyC& g) { return g.is_zero() || g.is_monomial(); });
}

int IdealPresentation::linear_form_count() const
{
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& g : generators_)
        rows.push_back(g.linear_part());
    return Matrix::from_rows(rows).rank();
}

IdealPresentation IdealPresentation::augmented(const std::vector<PolyC>& extra) const
{
    std::vector<PolyC> gens = generators_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    // Generators are already centred; keep the base point for reporting only.
    IdealPresentation out(nvars_, std::move(gens));
    out.base_point_ = base_point_;
    return out;
}

namespace {

struct Reducer {
    const PolyC* poly;
    Exponent lead;
    int ecart;
};

Reducer make_reducer(const PolyC& p)
{
    return {&p, p.leading_exponent(), p.ecart()};
}

class StepCounter {
public:
    explicit StepCounter(const Budget& b) : budget_(b) {}

    void tick(const PolyC& h)
    {
        if (++steps_ > budget_.max_steps)
            throw Error(ErrorCode::budget_exceeded, "standard basis exceeded its reduction-step budget");
        if (h.degree() > budget_.max_degree)
            throw Error(ErrorCode::budget_exceeded, "standard basis exceeded its degree budget");
    }

private:
    const Budget& budget_;
    std::int64_t steps_ = 0;
};

PolyC normal_form_impl(PolyC h, const std::vector<PolyC>& basis, StepCounter& counter)
{
    std::vector<Reducer> reducers;
    reducers.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero())
            reducers.push_back(make_reducer(g));
    // Intermediate remainders appended by the ecart rule.
    std::vector<std::unique_ptr<PolyC>> owned;

    while (!h.is_zero()) {
        const Exponent lead = h.leading_exponent();
        const Reducer* best = nullptr;
        for (const auto& r : reducers)
            if (divides(r.lead, lead) && (best == nullptr || r.ecart < best->ecart))
                best = &r;
        if (best == nullptr)
            break;
        const int h_ecart = h.ecart();
        Reducer chosen = *best;
        if (chosen.ecart > h_ecart) {
            owned.push_back(std::make_unique<PolyC>(h));
            reducers.push_back(make_reducer(*owned.back()));
        }
        Exponent shift(lead.size());
        for (std::size_t j = 0; j < lead.size(); ++j)
            shift[j] = lead[j] - chosen.lead[j];
        GaussianRational factor = h.leading_coefficient() / chosen.poly->leading_coefficient();
        h -= chosen.poly->shifted(shift, factor);
        counter.tick(h);
    }
    return h;
}

PolyC monic(const PolyC& p)
{
    return p * p.leading_coefficient().inverse();
}

PolyC s_polynomial(const PolyC& f, const PolyC& g)
{
    const Exponent& a = f.leading_exponent();
    const Exponent& b = g.leading_exponent();
    Exponent fa(a.size());
    Exponent gb(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        int l = std::max(a[j], b[j]);
        fa[j] = l - a[j];
        gb[j] = l - b[j];
    }
    return f.shifted(fa, f.leading_coefficient().inverse()) - g.shifted(gb, g.leading_coefficient().inverse());
}

int lcm_degree(const Exponent& a, const Exponent& b)
{
    int d = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        d += std::max(a[j], b[j]);
    return d;
}

bool coprime(const Exponent& a, const Exponent& b)
{
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != 0 && b[j] != 0)
            return false;
    return true;
}

}  // namespace

PolyC mora_normal_form(const PolyC& f, const std::vector<PolyC>& basis, const Budget& budget)
{
    StepCounter counter(budget);
    return normal_form_impl(f, basis, counter);
}

StandardBasisResult standard_basis(const IdealPresentation& ideal, const Budget& budget)
{
    StepCounter counter(budget);
    std::vector<PolyC> basis;
    for (const auto& g : ideal.generators())
        if (!g.is_zero())
            basis.push_back(monic(g));

    // Pair queue ordered by lcm degree, then by indices.
    using Pair = std::tuple<int, std::size_t, std::size_t>;
    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const auto& a = basis[i].leading_exponent();
            const auto& b = basis[j].leading_exponent();
            if (coprime(a, b))
                continue;  // product criterion
            pairs.emplace_back(lcm_degree(a, b), i, j);
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j)
        push_pairs(j);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end());
        auto [deg, i, j] = *it;
        pairs.erase(it);
        PolyC h = normal_form_impl(s_polynomial(basis[i], basis[j]), basis, counter);
        if (h.is_zero())
            continue;
        basis.push_back(monic(h));
        push_pairs(basis.size() - 1);
    }

    StandardBasisResult out;
    out.nvars = ideal.nvars();
    // Keep elements whose leading exponent is minimal; first occurrence wins ties.
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& lj = basis[j].leading_exponent();
        bool redundant = false;
        for (std::size_t i = 0; i < basis.size() && !redundant; ++i) {
            if (i == j)
                continue;
            const auto& li = basis[i].leading_exponent();
            if (divides(li, lj) && (li != lj || i < j))
                redundant = true;
        }
        if (!redundant) {
            out.basis.push_back(basis[j]);
            out.leading_exponents.push_back(lj);
        }
    }
    return out;
}

bool StandardBasisResult::is_zero_dimensional() const
{
    for (int v = 0; v < nvars; ++v) {
        bool found = std::any_of(leading_exponents.begin(), leading_exponents.end(), [&](const Exponent& e) {
            for (int j = 0; j < nvars; ++j)
                if ((j == v) != (e[static_cast<std::size_t>(j)] > 0))
                    return false;
            return true;
        });
        if (!found)
            return false;
    }
    return true;
}

std::vector<Exponent> StandardBasisResult::staircase() const
{
    if (!is_zero_dimensional())
        throw Error(ErrorCode::invalid_argument, "staircase of a positive-dimensional ideal is infinite");
    // Bounding box from the pure powers.
    std::vector<int> bound(static_cast<std::size_t>(nvars), 0);
    for (const auto& e : leading_exponents) {
        int nz = 0;
        int var = -1;
        for (int j = 0; j < nvars; ++j)
            if (e[static_cast<std::size_t>(j)] > 0) {
                ++nz;
                var = j;
            }
        if (nz == 1) {
            int p = e[static_cast<std::size_t>(var)];
            auto& b = bound[static_cast<std::size_t>(var)];
            b = (b == 0) ? p : std::min(b, p);
        }
    }
    std::vector<Exponent> out;
    Exponent cur(static_cast<std::size_t>(nvars), 0);
    std::function<void(int)> walk = [&](int j) {
        if (j == nvars) {
            bool inside = std::any_of(leading_exponents.begin(), leading_exponents.end(),
                                      [&](const Exponent& e) { return divides(e, cur); });
            if (!inside)
                out.push_back(cur);
            return;
        }
        for (int k = 0; k < bound[static_cast<std::size_t>(j)]; ++k) {
            cur[static_cast<std::size_t>(j)] = k;
            walk(j + 1);
        }
        cur[static_cast<std::size_t>(j)] = 0;
    };
    walk(0);
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) { return local_greater(a, b); });
    return out;
}

ExtendedRational StandardBasisResult::colength() const
{
    if (!is_zero_dimensional())
        return ExtendedRational::infinite();
    return ExtendedRational::finite(Rational(static_cast<long>(staircase().size())));
}

bool local_membership(const PolyC& f, const StandardBasisResult& sb, const Budget& budget)
{
    if (f.nvars() != sb.nvars)
        throw Error(ErrorCode::arity_mismatch, "membership test across different rings");
    return mora_normal_form(f, sb.basis, budget).is_zero();
}

ExtendedRational multiplicity(const IdealPresentation& ideal, const Budget& budget)
{
    return standard_basis(ideal, budget).colength();
}

bool is_zero_dimensional(const IdealPresentation& ideal, const Budget& budget)
{
    return standard_basis(ideal, budget).is_zero_dimensional();
}

}  // namespace qtype

namespace qtype {

GenericValueReport generic_multiplicity(const IdealPresentation& ideal, int q, const SliceSampler& sampler_in,
                                        const Budget& budget)
{
    SliceSampler sampler = sampler_in;
    sampler.q = q;
    if (q < 2 || q > ideal.nvars())
        throw Error(ErrorCode::invalid_argument, "q must satisfy 2 <= q <= n");
    struct Outcome {
        std::optional<SampleValue> value;
        int rejected = 0;
    };
    auto results = parallel_map(static_cast<std::size_t>(sampler.samples), sampler.threads, [&](std::size_t i) {
        Outcome o;
        auto [slice, rejected] = sampler.draw_slice(ideal.nvars(), static_cast<int>(i));
        o.rejected = rejected;
        if (slice)
            o.value = SampleValue{multiplicity(ideal.augmented(slice->forms()), budget), true};
        return o;
    });
    std::vector<std::optional<SampleValue>> values;
    int rejected = 0;
    for (auto& o : results) {
        values.push_back(o.value);
        rejected += o.rejected;
    }
    return aggregate_samples(values, rejected, sampler, "mode");
}

}  // namespace qtype
