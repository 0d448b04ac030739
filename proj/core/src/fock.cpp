#include "kn/fock.hpp"

#include <algorithm>
#include <sstream>

namespace kn {

SlotIndex slot_successor(SlotIndex s, int K) {
    if (s.point < K) return {s.degree, s.point + 1};
    return {s.degree + HalfInteger(1), 1};
}

SlotIndex slot_predecessor(SlotIndex s, int K) {
    if (s.point > 1) return {s.degree, s.point - 1};
    return {s.degree - HalfInteger(1), K};
}

WedgeMonomial::WedgeMonomial(HalfInteger weight, std::vector<SlotIndex> prefix,
                             SlotIndex tail_start, int K)
    : weight_(weight), prefix_(std::move(prefix)), tail_(tail_start) {
    std::sort(prefix_.begin(), prefix_.end());
    for (std::size_t k = 0; k + 1 < prefix_.size(); ++k)
        if (prefix_[k] == prefix_[k + 1])
            throw domain_error("duplicate slot " + prefix_[k].str() + " in wedge monomial");
    if (!prefix_.empty() && !(prefix_.back() < tail_))
        throw domain_error("prefix slot " + prefix_.back().str() + " not below the tail start " +
                           tail_.str());
    for (const auto& s : prefix_)
        if (s.point < 1 || s.point > K)
            throw domain_error("slot point index out of range: " + s.str());
    // Absorb a contiguous run of prefix slots ending right before the tail.
    while (!prefix_.empty() && prefix_.back() == slot_predecessor(tail_, K)) {
        tail_ = prefix_.back();
        prefix_.pop_back();
    }
}

WedgeMonomial WedgeMonomial::vacuum(HalfInteger weight, HalfInteger T) {
    WedgeMonomial m(weight, {}, SlotIndex{T, 1}, 1);
    return m;
}

bool WedgeMonomial::occupied(const SlotIndex& idx) const {
    if (!(idx < tail_)) return true;
    return std::binary_search(prefix_.begin(), prefix_.end(), idx);
}

long WedgeMonomial::position(const SlotIndex& idx, int K) const {
    if (idx < tail_) {
        auto it = std::lower_bound(prefix_.begin(), prefix_.end(), idx);
        if (it == prefix_.end() || !(*it == idx))
            throw domain_error("slot " + idx.str() + " is not occupied");
        return static_cast<long>(it - prefix_.begin()) + 1;
    }
    long steps = ((idx.degree - tail_.degree).twice() / 2) * K + (idx.point - tail_.point);
    return static_cast<long>(prefix_.size()) + steps + 1;
}

SlotIndex WedgeMonomial::max_missing(int K) const {
    SlotIndex idx = slot_predecessor(tail_, K);
    // Walk down through the prefix run sitting right below the tail; the
    // canonical form guarantees the slot straight below the tail is free,
    // but after removals this helper is also used on ad hoc data.
    while (std::binary_search(prefix_.begin(), prefix_.end(), idx))
        idx = slot_predecessor(idx, K);
    return idx;
}

std::vector<SlotIndex> WedgeMonomial::occupied_below(const SlotIndex& bound, int K) const {
    std::vector<SlotIndex> out;
    for (const auto& s : prefix_)
        if (s < bound) out.push_back(s);
    for (SlotIndex s = tail_; s < bound; s = slot_successor(s, K)) out.push_back(s);
    return out;
}

std::pair<WedgeMonomial, int> WedgeMonomial::remove(const SlotIndex& idx, int K) const {
    long l = position(idx, K);
    int sign = l % 2 == 1 ? 1 : -1;
    std::vector<SlotIndex> prefix = prefix_;
    SlotIndex tail = tail_;
    if (idx < tail_) {
        prefix.erase(std::find(prefix.begin(), prefix.end(), idx));
    } else {
        // Slots of the tail before idx become exceptional prefix entries.
        for (SlotIndex s = tail_; s < idx; s = slot_successor(s, K)) prefix.push_back(s);
        tail = slot_successor(idx, K);
    }
    return {WedgeMonomial(weight_, std::move(prefix), tail, K), sign};
}

std::optional<std::pair<WedgeMonomial, int>> WedgeMonomial::insert(const SlotIndex& idx,
                                                                   int K) const {
    if (occupied(idx)) return std::nullopt;
    auto it = std::lower_bound(prefix_.begin(), prefix_.end(), idx);
    int sign = (it - prefix_.begin()) % 2 == 0 ? 1 : -1;
    std::vector<SlotIndex> prefix = prefix_;
    prefix.insert(prefix.begin() + (it - prefix_.begin()), idx);
    return std::make_pair(WedgeMonomial(weight_, std::move(prefix), tail_, K), sign);
}

std::string WedgeMonomial::str() const {
    std::ostringstream os;
    os << "[";
    for (const auto& s : prefix_) os << s.str() << " ";
    os << "tail " << tail_.str() << "]";
    return os.str();
}

void FockVector::add(const WedgeMonomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational FockVector::coefficient(const WedgeMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

FockVector operator*(const GaussianRational& c, FockVector v) {
    if (c.is_zero()) return FockVector();
    for (auto& [m, x] : v.terms_) x *= c;
    return v;
}

std::string FockVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")" << m.str();
    }
    return os.str();
}

FockSpace::FockSpace(const BasisCache& basis, HalfInteger weight, HalfInteger ref_vacuum_degree)
    : basis_(basis), lambda_(weight), ref_T_(ref_vacuum_degree) {
    if (!in_degree_set(ref_T_, lambda_))
        throw domain_error("reference vacuum degree " + ref_T_.str() +
                           " is not admissible for weight " + lambda_.str());
}

FockVector FockSpace::wedge_op(const MeromorphicForm& f, const FockVector& v) const {
    if (!f.is_zero() && f.weight != lambda_)
        throw weight_mismatch("wedge operator needs a weight-" + lambda_.str() + " form");
    FockVector out;
    auto coeffs = expand_in_basis(f, basis_);
    for (const auto& [m, c] : v.terms()) {
        for (const auto& [idx, a] : coeffs) {
            auto ins = m.insert(SlotIndex{idx.degree, idx.point}, K());
            if (!ins) continue;
            out.add(ins->first, GaussianRational(ins->second) * a * c);
        }
    }
    return out;
}

FockVector FockSpace::contraction_op(const MeromorphicForm& g, const FockVector& v) const {
    if (!g.is_zero() && g.weight != HalfInteger(1) - lambda_)
        throw weight_mismatch("contraction needs a weight-" + (HalfInteger(1) - lambda_).str() +
                              " form");
    FockVector out;
    auto coeffs = expand_in_basis(g, basis_);
    for (const auto& [m, c] : v.terms()) {
        for (const auto& [idx, b] : coeffs) {
            // The dual of basis index (j,q) pairs with slot (-j,q).
            SlotIndex slot{-idx.degree, idx.point};
            if (!m.occupied(slot)) continue;
            auto [removed, sign] = m.remove(slot, K());
            out.add(removed, GaussianRational(sign) * b * c);
        }
    }
    return out;
}

FockOperator::FockOperator(const FockSpace& space, D1Element op)
    : space_(space), op_(std::move(op)) {
    // Lowest degree the operator can shift a slot by, read off from the
    // operator's own basis expansions; products and actions of degree-d
    // generators never lower the target degree below slot + d.
    bool have = false;
    HalfInteger lo(0);
    for (const MeromorphicForm* part : {&op_.fn, &op_.vec}) {
        if (part->is_zero()) continue;
        auto coeffs = expand_in_basis(*part, space_.basis());
        if (coeffs.empty()) continue;
        HalfInteger d = coeffs.begin()->first.degree;
        if (!have || d < lo) lo = d;
        have = true;
    }
    zero_ = !have;
    lo_shift_ = lo;
}

const std::map<SlotIndex, GaussianRational>& FockOperator::column(const SlotIndex& j) const {
    auto it = cols_.find(j);
    if (it != cols_.end()) return it->second;
    MeromorphicForm basis_form = space_.basis().element({space_.weight(), j.degree, j.point});
    MeromorphicForm image = d1_action(op_, basis_form);
    std::map<SlotIndex, GaussianRational> col;
    for (const auto& [idx, c] : expand_in_basis(image, space_.basis()))
        col[SlotIndex{idx.degree, idx.point}] = c;
    return cols_.emplace(j, std::move(col)).first->second;
}

FockVector FockOperator::apply(const FockVector& v) const {
    FockVector out;
    if (zero_) return out;
    int K = space_.K();
    WedgeMonomial ref = space_.vacuum(space_.ref_degree());

    for (const auto& [m, cm] : v.terms()) {
        // Off-diagonal moves: a slot j can only land on an unoccupied index,
        // and every index above max_missing is occupied, so slots with
        // degree > max_missing_degree - lo_shift contribute nothing.
        SlotIndex miss = m.max_missing(K);
        HalfInteger cut = miss.degree - lo_shift_;
        SlotIndex bound{cut + HalfInteger(1), 1};  // first slot beyond the cut
        for (const SlotIndex& j : m.occupied_below(bound, K)) {
            for (const auto& [target, a] : column(j)) {
                if (target == j) continue;  // diagonal handled below
                if (m.occupied(target)) continue;
                auto [without, s1] = m.remove(j, K);
                auto ins = without.insert(target, K);
                out.add(ins->first, GaussianRational(s1 * ins->second) * a * cm);
            }
        }
        // Normal-ordered diagonal relative to the reference vacuum.
        GaussianRational diag;
        SlotIndex ref_start = ref.tail_start();
        for (const SlotIndex& j : m.occupied_below(ref_start, K)) {
            auto it = column(j).find(j);
            if (it != column(j).end()) diag += it->second;
        }
        // Slots of the reference vacuum missing from m.
        {
            SlotIndex j = ref_start;
            SlotIndex stop = m.tail_start() < ref_start ? ref_start : m.tail_start();
            for (; j < stop; j = slot_successor(j, K)) {
                if (m.occupied(j)) continue;
                auto it = column(j).find(j);
                if (it != column(j).end()) diag -= it->second;
            }
        }
        if (!diag.is_zero()) out.add(m, diag * cm);
    }
    return out;
}

GaussianRational rep_cocycle(const FockSpace& space, const D1Element& x, const D1Element& y,
                             const std::vector<WedgeMonomial>& probes) {
    if (probes.empty()) throw domain_error("rep_cocycle needs at least one probe");
    FockOperator rx(space, x);
    FockOperator ry(space, y);
    FockOperator rxy(space, d1_bracket(x, y));

    std::optional<GaussianRational> chi;
    for (const WedgeMonomial& probe : probes) {
        FockVector v(probe);
        FockVector defect = rx.apply(ry.apply(v)) - ry.apply(rx.apply(v)) - rxy.apply(v);
        GaussianRational at_probe = defect.coefficient(probe);
        FockVector rest = defect - at_probe * FockVector(probe);
        if (!rest.is_zero())
            throw defect_error("representation defect is not scalar on probe " + probe.str() +
                               ": remainder " + rest.str());
        if (!chi) {
            chi = at_probe;
        } else if (!(*chi == at_probe)) {
            throw defect_error("representation defect differs between probes: " + chi->str() +
                               " vs " + at_probe.str() + " on " + probe.str());
        }
    }
    return *chi;
}

std::vector<WedgeMonomial> window_monomials(const BasisCache& basis, HalfInteger weight,
                                            HalfInteger lo, HalfInteger hi) {
    int K = basis.geometry().K();
    std::vector<SlotIndex> window;
    for (HalfInteger d : degree_range(weight, lo, hi))
        for (int p = 1; p <= K; ++p) window.push_back({d, p});
    if (window.empty()) throw domain_error("empty monomial window");
    // First slot above the window; degrees in the set step by one.
    SlotIndex top{window.back().degree + HalfInteger(1), 1};

    std::vector<WedgeMonomial> out;
    std::size_t n = window.size();
    if (n > 20) throw domain_error("window too large to enumerate");
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << n); ++mask) {
        std::vector<SlotIndex> prefix;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (static_cast<std::size_t>(1) << k)) prefix.push_back(window[k]);
        out.emplace_back(weight, std::move(prefix), top, K);
    }
    return out;
}

}  // namespace kn
