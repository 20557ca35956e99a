#include "qhl/tensor.hpp"

#include "qhl/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qhl {

namespace {

constexpr std::uint64_t kSlotTableLimit = std::uint64_t{1} << 24;
constexpr std::uint64_t kDenseBuilderLimit = std::uint64_t{1} << 16;

std::string shape_string(const Shape& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

std::vector<std::uint64_t> strides_for(const Shape& shape, std::uint64_t& volume)
{
    std::vector<std::uint64_t> st(shape.size());
    volume = 1;
    for (std::size_t k = shape.size(); k-- > 0;) {
        st[k] = volume;
        if (shape[k] == 0)
            throw ShapeMismatch("zero-length axis in shape " + shape_string(shape));
        if (volume > std::numeric_limits<std::uint64_t>::max() / shape[k])
            throw ShapeMismatch("tensor volume overflows 64 bits: " + shape_string(shape));
        volume *= shape[k];
    }
    return st;
}

} // namespace

// ------------------------------------------------------------------- Tensor

Tensor::Tensor(const FieldSpec& field, Shape shape) : field_(field), shape_(std::move(shape))
{
    init_layout();
}

void Tensor::init_layout()
{
    strides_ = strides_for(shape_, volume_);
}

void Tensor::build_slots()
{
    slots_.clear();
    if (entries_.size() * 2 > volume_ && volume_ <= kSlotTableLimit) {
        slots_.assign(volume_, -1);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            slots_[entries_[i].flat] = static_cast<std::int32_t>(i);
    }
}

Tensor Tensor::from_entries(const FieldSpec& field, Shape shape, std::vector<Entry> raw)
{
    Tensor t(field, std::move(shape));
    for (const auto& e : raw) {
        if (e.flat >= t.volume_)
            throw ShapeMismatch("entry outside shape " + shape_string(t.shape_));
        if (e.value.field() != field)
            throw FieldMismatch("entry field " + e.value.field().to_string() + " in tensor over " +
                                field.to_string());
    }
    std::sort(raw.begin(), raw.end(),
              [](const Entry& a, const Entry& b) { return a.flat < b.flat; });
    std::vector<Entry> merged;
    merged.reserve(raw.size());
    for (auto& e : raw) {
        if (!merged.empty() && merged.back().flat == e.flat)
            merged.back().value += e.value;
        else
            merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return e.value.is_zero(); });
    t.entries_ = std::move(merged);
    t.build_slots();
    return t;
}

Tensor Tensor::basis_vector(const FieldSpec& field, std::size_t n, std::size_t i)
{
    if (i >= n)
        throw ShapeMismatch("basis index out of range");
    return from_entries(field, {n}, {{i, Scalar::one(field)}});
}

Tensor Tensor::identity(const FieldSpec& field, std::size_t n)
{
    std::vector<Entry> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back({i * n + i, Scalar::one(field)});
    return from_entries(field, {n, n}, std::move(e));
}

Tensor Tensor::scalar(const Scalar& s)
{
    return from_entries(s.field(), {}, {{0, s}});
}

std::uint64_t Tensor::flat(const Index& idx) const
{
    if (idx.size() != shape_.size())
        throw ShapeMismatch("index rank " + std::to_string(idx.size()) + " vs tensor rank " +
                            std::to_string(shape_.size()));
    std::uint64_t f = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= shape_[k])
            throw ShapeMismatch("index out of bounds for shape " + shape_string(shape_));
        f += idx[k] * strides_[k];
    }
    return f;
}

Index Tensor::unflat(std::uint64_t flat) const
{
    Index idx(shape_.size());
    for (std::size_t k = 0; k < shape_.size(); ++k) {
        idx[k] = flat / strides_[k];
        flat %= strides_[k];
    }
    return idx;
}

const Scalar* Tensor::find(std::uint64_t flat) const
{
    if (!slots_.empty()) {
        if (flat >= volume_)
            return nullptr;
        auto s = slots_[flat];
        return s < 0 ? nullptr : &entries_[s].value;
    }
    auto it = std::lower_bound(entries_.begin(), entries_.end(), flat,
                               [](const Entry& e, std::uint64_t f) { return e.flat < f; });
    if (it == entries_.end() || it->flat != flat)
        return nullptr;
    return &it->value;
}

Scalar Tensor::at(const Index& idx) const
{
    return at_flat(flat(idx));
}

Scalar Tensor::at_flat(std::uint64_t flat) const
{
    const Scalar* s = find(flat);
    return s ? *s : Scalar::zero(field_);
}

std::span<const Entry> Tensor::prefix_range(std::uint64_t prefix, std::size_t prefix_rank) const
{
    const std::uint64_t block = prefix_rank == 0 ? volume_ : strides_[prefix_rank - 1];
    const std::uint64_t lo = prefix * block, hi = lo + block;
    auto cmp = [](const Entry& e, std::uint64_t f) { return e.flat < f; };
    auto b = std::lower_bound(entries_.begin(), entries_.end(), lo, cmp);
    auto e = std::lower_bound(b, entries_.end(), hi, cmp);
    return {entries_.data() + (b - entries_.begin()), static_cast<std::size_t>(e - b)};
}

Tensor Tensor::reshape(Shape shape) const
{
    Tensor t(field_, std::move(shape));
    if (t.volume_ != volume_)
        throw ShapeMismatch("reshape " + shape_string(shape_) + " -> " + shape_string(t.shape_));
    t.entries_ = entries_;
    t.build_slots();
    return t;
}

Tensor Tensor::permute(const std::vector<std::size_t>& perm) const
{
    if (perm.size() != rank())
        throw ShapeMismatch("permutation rank mismatch");
    Shape ns(rank());
    std::vector<bool> seen(rank(), false);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (perm[i] >= rank() || seen[perm[i]])
            throw ShapeMismatch("not a permutation");
        seen[perm[i]] = true;
        ns[i] = shape_[perm[i]];
    }
    Tensor t(field_, ns);
    std::vector<Entry> raw;
    raw.reserve(entries_.size());
    for (const auto& e : entries_) {
        std::uint64_t rest = e.flat, f = 0;
        Index idx(rank());
        for (std::size_t k = 0; k < rank(); ++k) {
            idx[k] = rest / strides_[k];
            rest %= strides_[k];
        }
        for (std::size_t i = 0; i < rank(); ++i)
            f += idx[perm[i]] * t.strides_[i];
        raw.push_back({f, e.value});
    }
    std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.flat < b.flat; });
    t.entries_ = std::move(raw);
    t.build_slots();
    return t;
}

Tensor Tensor::scaled(const Scalar& s) const
{
    Tensor t(field_, shape_);
    if (s.is_zero())
        return t;
    t.entries_.reserve(entries_.size());
    for (const auto& e : entries_)
        t.entries_.push_back({e.flat, e.value * s});
    t.build_slots();
    return t;
}

Tensor& Tensor::operator+=(const Tensor& o)
{
    if (o.shape_ != shape_)
        throw ShapeMismatch("add " + shape_string(shape_) + " and " + shape_string(o.shape_));
    if (o.field_ != field_)
        throw FieldMismatch("add over different fields");
    std::vector<Entry> out;
    out.reserve(entries_.size() + o.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() || j < o.entries_.size()) {
        if (j == o.entries_.size() || (i < entries_.size() && entries_[i].flat < o.entries_[j].flat)) {
            out.push_back(std::move(entries_[i++]));
        } else if (i == entries_.size() || o.entries_[j].flat < entries_[i].flat) {
            out.push_back(o.entries_[j++]);
        } else {
            Scalar s = entries_[i].value + o.entries_[j].value;
            if (!s.is_zero())
                out.push_back({entries_[i].flat, std::move(s)});
            ++i;
            ++j;
        }
    }
    entries_ = std::move(out);
    build_slots();
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o)
{
    return *this += -o;
}

bool operator==(const Tensor& a, const Tensor& b)
{
    if (a.shape_ != b.shape_ || a.field_ != b.field_ || a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i].flat != b.entries_[i].flat || a.entries_[i].value != b.entries_[i].value)
            return false;
    return true;
}

std::optional<Index> Tensor::first_difference(const Tensor& o) const
{
    if (o.shape_ != shape_)
        throw ShapeMismatch("compare " + shape_string(shape_) + " with " + shape_string(o.shape_));
    std::size_t i = 0, j = 0;
    while (i < entries_.size() || j < o.entries_.size()) {
        if (i < entries_.size() && j < o.entries_.size() && entries_[i].flat == o.entries_[j].flat) {
            if (entries_[i].value != o.entries_[j].value)
                return unflat(entries_[i].flat);
            ++i;
            ++j;
        } else if (j == o.entries_.size() ||
                   (i < entries_.size() && entries_[i].flat < o.entries_[j].flat)) {
            return unflat(entries_[i].flat);
        } else {
            return unflat(o.entries_[j].flat);
        }
    }
    return std::nullopt;
}

std::string Tensor::to_string() const
{
    std::ostringstream os;
    os << "Tensor" << shape_string(shape_) << "{";
    bool first = true;
    for (const auto& e : entries_) {
        os << (first ? "" : ", ");
        first = false;
        Index idx = unflat(e.flat);
        os << "(";
        for (std::size_t k = 0; k < idx.size(); ++k)
            os << (k ? "," : "") << idx[k];
        os << "): " << e.value;
    }
    os << "}";
    return os.str();
}

// ------------------------------------------------------------ TensorBuilder

TensorBuilder::TensorBuilder(const FieldSpec& field, Shape shape)
    : field_(field), shape_(std::move(shape))
{
    std::uint64_t volume = 1;
    strides_ = strides_for(shape_, volume);
    use_dense_ = volume <= kDenseBuilderLimit;
    if (use_dense_)
        dense_.assign(volume, -1);
}

std::uint64_t TensorBuilder::flat(const Index& idx) const
{
    if (idx.size() != shape_.size())
        throw ShapeMismatch("builder index rank mismatch");
    std::uint64_t f = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= shape_[k])
            throw ShapeMismatch("builder index out of bounds");
        f += idx[k] * strides_[k];
    }
    return f;
}

Scalar& TensorBuilder::slot(std::uint64_t flat)
{
    if (use_dense_) {
        auto& s = dense_[flat];
        if (s < 0) {
            s = static_cast<std::int32_t>(acc_.size());
            acc_.push_back({flat, Scalar::zero(field_)});
        }
        return acc_[s].value;
    }
    auto [it, inserted] = map_.try_emplace(flat, static_cast<std::uint32_t>(acc_.size()));
    if (inserted)
        acc_.push_back({flat, Scalar::zero(field_)});
    return acc_[it->second].value;
}

void TensorBuilder::add(std::uint64_t flat, const Scalar& s)
{
    if (s.is_zero())
        return;
    slot(flat) += s;
}

void TensorBuilder::add(const Index& idx, const Scalar& s)
{
    add(flat(idx), s);
}

void TensorBuilder::add_product(std::uint64_t flat, const Scalar& a, const Scalar& b)
{
    slot(flat).add_product(a, b);
}

Tensor TensorBuilder::build()
{
    std::erase_if(acc_, [](const Entry& e) { return e.value.is_zero(); });
    Tensor out = Tensor::from_entries(field_, shape_, std::move(acc_));
    acc_.clear();
    dense_.clear();
    map_.clear();
    return out;
}

// ------------------------------------------------------------ contractions

namespace {

struct Labeled
{
    Tensor t;
    std::vector<int> labels;
};

// Contracts a with b. Labels in `keep` survive (shared ones once); all
// other labels are summed out.
Labeled contract_pair(const Labeled& a, const Labeled& b, const std::vector<int>& keep)
{
    if (a.t.field() != b.t.field())
        throw FieldMismatch("contraction over different fields");
    auto kept = [&](int l) { return std::find(keep.begin(), keep.end(), l) != keep.end(); };
    auto pos = [](const std::vector<int>& ls, int l) -> int {
        auto it = std::find(ls.begin(), ls.end(), l);
        return it == ls.end() ? -1 : static_cast<int>(it - ls.begin());
    };

    std::vector<int> shared;
    for (int l : a.labels)
        if (pos(b.labels, l) >= 0)
            shared.push_back(l);
    for (int l : shared)
        if (a.t.dim(pos(a.labels, l)) != b.t.dim(pos(b.labels, l)))
            throw ShapeMismatch("contracted axes differ in length");

    Labeled r;
    Shape rshape;
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        if (kept(a.labels[i])) {
            r.labels.push_back(a.labels[i]);
            rshape.push_back(a.t.dim(i));
        }
    for (std::size_t i = 0; i < b.labels.size(); ++i)
        if (kept(b.labels[i]) && pos(a.labels, b.labels[i]) < 0) {
            r.labels.push_back(b.labels[i]);
            rshape.push_back(b.t.dim(i));
        }
    TensorBuilder out(a.t.field(), rshape);
    std::uint64_t vol = 1;
    std::vector<std::uint64_t> rstride = strides_for(rshape, vol);

    // key strides over shared labels
    std::vector<std::uint64_t> kstride(shared.size());
    {
        std::uint64_t s = 1;
        for (std::size_t k = shared.size(); k-- > 0;) {
            kstride[k] = s;
            s *= a.t.dim(pos(a.labels, shared[k]));
        }
    }

    // Per-axis contributions (to key, to result flat) for each operand.
    auto axis_plan = [&](const Labeled& x, bool is_a) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> plan(x.labels.size(), {0, 0});
        for (std::size_t i = 0; i < x.labels.size(); ++i) {
            int l = x.labels[i];
            int sk = pos(shared, l);
            if (sk >= 0)
                plan[i].first = kstride[sk];
            int rp = pos(r.labels, l);
            if (rp >= 0 && (is_a || pos(a.labels, l) < 0))
                plan[i].second = rstride[rp];
        }
        return plan;
    };
    auto plan_a = axis_plan(a, true);
    auto plan_b = axis_plan(b, false);

    struct Keyed
    {
        std::uint64_t key, part;
        const Scalar* v;
    };
    auto keyed = [](const Tensor& t, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& plan) {
        std::vector<Keyed> out;
        out.reserve(t.nnz());
        for (const auto& e : t.entries()) {
            std::uint64_t rest = e.flat, key = 0, part = 0;
            for (std::size_t k = 0; k < t.rank(); ++k) {
                std::uint64_t i = rest / t.stride(k);
                rest %= t.stride(k);
                key += i * plan[k].first;
                part += i * plan[k].second;
            }
            out.push_back({key, part, &e.value});
        }
        return out;
    };
    auto ka = keyed(a.t, plan_a);
    auto kb = keyed(b.t, plan_b);
    std::sort(kb.begin(), kb.end(), [](const Keyed& x, const Keyed& y) { return x.key < y.key; });
    for (const auto& x : ka) {
        auto lo = std::lower_bound(kb.begin(), kb.end(), x.key,
                                   [](const Keyed& k, std::uint64_t v) { return k.key < v; });
        for (auto it = lo; it != kb.end() && it->key == x.key; ++it)
            out.add_product(x.part + it->part, *x.v, *it->v);
    }
    r.t = out.build();
    return r;
}

// Sums out labels not in `keep`, preserving the order of the rest.
Labeled reduce(const Labeled& a, const std::vector<int>& keep)
{
    Tensor one = Tensor::scalar(Scalar::one(a.t.field()));
    return contract_pair(a, Labeled{one, {}}, keep);
}

} // namespace

Tensor contract(const Tensor& t1, const Tensor& t2,
                const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
{
    std::vector<int> l1(t1.rank()), l2(t2.rank());
    for (std::size_t i = 0; i < l1.size(); ++i)
        l1[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < l2.size(); ++i)
        l2[i] = static_cast<int>(1000 + i);
    std::vector<bool> used1(t1.rank(), false), used2(t2.rank(), false);
    for (auto [p, q] : pairs) {
        if (p >= t1.rank() || q >= t2.rank())
            throw ShapeMismatch("contraction axis out of range");
        if (t1.dim(p) != t2.dim(q))
            throw ShapeMismatch("paired axes have different lengths");
        if (used1[p] || used2[q])
            throw ShapeMismatch("axis paired twice");
        used1[p] = used2[q] = true;
        l2[q] = l1[p];
    }
    std::vector<int> keep;
    for (std::size_t i = 0; i < l1.size(); ++i)
        if (!used1[i])
            keep.push_back(l1[i]);
    for (std::size_t i = 0; i < l2.size(); ++i)
        if (!used2[i])
            keep.push_back(l2[i]);
    return contract_pair({t1, l1}, {t2, l2}, keep).t;
}

Tensor outer(const Tensor& a, const Tensor& b)
{
    return contract(a, b, {});
}

Tensor einsum(const std::vector<EinsumTerm>& terms, const std::vector<int>& out)
{
    if (terms.empty())
        throw ShapeMismatch("einsum without operands");
    std::vector<Labeled> items;
    items.reserve(terms.size());
    for (const auto& term : terms) {
        if (term.labels.size() != term.tensor->rank())
            throw ShapeMismatch("einsum label count differs from tensor rank");
        for (std::size_t i = 0; i < term.labels.size(); ++i)
            for (std::size_t j = i + 1; j < term.labels.size(); ++j)
                if (term.labels[i] == term.labels[j])
                    throw ShapeMismatch("repeated label inside one einsum operand");
        items.push_back({*term.tensor, term.labels});
    }
    for (int l : out) {
        bool found = false;
        for (const auto& it : items)
            found = found || std::find(it.labels.begin(), it.labels.end(), l) != it.labels.end();
        if (!found)
            throw ShapeMismatch("einsum output label absent from operands");
    }

    auto keep_for = [&](std::size_t i, std::size_t j) {
        std::vector<int> keep = out;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (k == i || k == j)
                continue;
            keep.insert(keep.end(), items[k].labels.begin(), items[k].labels.end());
        }
        return keep;
    };

    while (items.size() > 1) {
        // Greedy: expected number of matching entry pairs.
        double best = -1;
        std::size_t bi = 0, bj = 1;
        bool best_shares = false;
        for (std::size_t i = 0; i < items.size(); ++i)
            for (std::size_t j = i + 1; j < items.size(); ++j) {
                double denom = 1;
                bool shares = false;
                for (std::size_t p = 0; p < items[i].labels.size(); ++p) {
                    auto it = std::find(items[j].labels.begin(), items[j].labels.end(), items[i].labels[p]);
                    if (it != items[j].labels.end()) {
                        shares = true;
                        denom *= static_cast<double>(items[i].t.dim(p));
                    }
                }
                double cost = static_cast<double>(items[i].t.nnz() + 1) *
                              static_cast<double>(items[j].t.nnz() + 1) / denom;
                if (best < 0 || (shares && !best_shares) || (shares == best_shares && cost < best)) {
                    best = cost;
                    best_shares = shares;
                    bi = i;
                    bj = j;
                }
            }
        Labeled merged = contract_pair(items[bi], items[bj], keep_for(bi, bj));
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(bj));
        items[bi] = std::move(merged);
    }
    Labeled last = reduce(items[0], out);
    std::vector<std::size_t> perm(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        perm[i] = static_cast<std::size_t>(
            std::find(last.labels.begin(), last.labels.end(), out[i]) - last.labels.begin());
    if (last.labels.size() != out.size())
        throw ShapeMismatch("repeated einsum output label");
    return last.t.permute(perm);
}

Tensor einsum(const std::string& spec, const std::vector<const Tensor*>& tensors)
{
    auto arrow = spec.find("->");
    if (arrow == std::string::npos)
        throw ShapeMismatch("einsum spec needs '->'");
    std::vector<std::vector<int>> lhs(1);
    for (std::size_t i = 0; i < arrow; ++i) {
        char c = spec[i];
        if (c == ',')
            lhs.emplace_back();
        else if (c != ' ')
            lhs.back().push_back(static_cast<unsigned char>(c));
    }
    std::vector<int> out;
    for (std::size_t i = arrow + 2; i < spec.size(); ++i)
        if (spec[i] != ' ')
            out.push_back(static_cast<unsigned char>(spec[i]));
    if (lhs.size() != tensors.size())
        throw ShapeMismatch("einsum spec lists " + std::to_string(lhs.size()) + " operands, got " +
                            std::to_string(tensors.size()));
    std::vector<EinsumTerm> terms;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        terms.push_back({tensors[i], lhs[i]});
    return einsum(terms, out);
}

} // namespace qhl
