#include "podles/linalg.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace podles {

template <class F>
void Eliminator<F>::axpy(SpCol<F>& dst, const F& f, const SpCol<F>& src) const {
    // dst -= f * src, both sorted by rank
    SpCol<F> out;
    out.e.reserve(dst.e.size() + src.e.size());
    size_t i = 0, j = 0;
    while (i < dst.e.size() || j < src.e.size()) {
        if (j == src.e.size() || (i < dst.e.size() && dst.e[i].first < src.e[j].first)) {
            out.e.push_back(std::move(dst.e[i++]));
        } else if (i == dst.e.size() || src.e[j].first < dst.e[i].first) {
            out.e.emplace_back(src.e[j].first, -(f * src.e[j].second));
            ++j;
        } else {
            F v = dst.e[i].second - f * src.e[j].second;
            if (!FieldTraits<F>::is_zero(v)) out.e.emplace_back(dst.e[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

template <class F>
bool Eliminator<F>::has_pivot_at(uint32_t rank_row) const {
    return rank_row < pivot_at_.size() && pivot_at_[rank_row] >= 0;
}

template <class F>
SpCol<F> Eliminator<F>::reduce(SpCol<F> v, SpCol<F>* combo) const {
    // On return (with tracking): v_in = remainder + sum combo_j * column_j.
    if (combo) combo->clear();
    while (!v.empty()) {
        uint32_t r = v.e.front().first;
        if (r >= pivot_at_.size() || pivot_at_[r] < 0) break;
        const Pivot& p = pivots_[pivot_at_[r]];
        F f = v.e.front().second;  // pivot entry of p.col is 1
        axpy(v, f, p.col);
        if (combo && track_) axpy(*combo, -f, p.combo);  // combo += f * p.combo
    }
    return v;
}

template <class F>
uint32_t Eliminator<F>::add_column(SpCol<F> col, uint32_t tag) {
    SpCol<F> combo;
    if (track_) combo.e.emplace_back(tag, FieldTraits<F>::one());
    while (!col.empty()) {
        uint32_t r = col.e.front().first;
        if (r >= pivot_at_.size() || pivot_at_[r] < 0) break;
        const Pivot& p = pivots_[pivot_at_[r]];
        F f = col.e.front().second;
        axpy(col, f, p.col);
        if (track_) axpy(combo, f, p.combo);
    }
    if (col.empty()) {
        if (track_) kernel_combos_.push_back(std::move(combo));
        return kNoPivot;
    }
    uint32_t r = col.e.front().first;
    F lead = col.e.front().second;
    if (!FieldTraits<F>::is_zero(lead - FieldTraits<F>::one())) {
        for (auto& [row, v] : col.e) v = FieldTraits<F>::div(v, lead);
        if (track_)
            for (auto& [c, v] : combo.e) v = FieldTraits<F>::div(v, lead);
    }
    if (pivot_at_.size() <= r) pivot_at_.resize(r + 1, -1);
    pivot_at_[r] = static_cast<int32_t>(pivots_.size());
    pivots_.push_back(Pivot{std::move(col), std::move(combo)});
    pivot_log_.emplace_back(tag, r);
    return r;
}

template class Eliminator<ScalarK>;
template class Eliminator<Rat>;

void SparseMatrix::add(uint32_t r, uint32_t c, ScalarK v) {
    if (v.is_zero()) return;
    rows = std::max(rows, r + 1);
    cols = std::max(cols, c + 1);
    entries.emplace_back(r, c, std::move(v));
}

SpCol<ScalarK> SparseMatrix::column(uint32_t c) const {
    SpCol<ScalarK> col;
    for (const auto& [r, cc, v] : entries)
        if (cc == c) col.e.emplace_back(r, v);
    std::sort(col.e.begin(), col.e.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SpCol<ScalarK> out;
    for (auto& [r, v] : col.e) {
        if (!out.e.empty() && out.e.back().first == r)
            out.e.back().second += v;
        else
            out.e.emplace_back(r, v);
    }
    std::erase_if(out.e, [](const auto& p) { return p.second.is_zero(); });
    return out;
}

namespace {

template <class F>
SpCol<F> apply_order(SpCol<F> col, const std::vector<uint32_t>& rank_of_row) {
    if (rank_of_row.empty()) return col;
    for (auto& [r, v] : col.e) r = rank_of_row[r];
    std::sort(col.e.begin(), col.e.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return col;
}

SpCol<Rat> specialize(const SpCol<ScalarK>& col, const Rat& s0) {
    SpCol<Rat> out;
    for (const auto& [r, v] : col.e) {
        Rat x = v.eval_at(s0);
        if (x != 0) out.e.emplace_back(r, x);
    }
    return out;
}

}  // namespace

uint32_t rank(const SparseMatrix& m, const std::vector<uint32_t>& row_order) {
    Eliminator<ScalarK> el;
    for (uint32_t c = 0; c < m.cols; ++c) el.add_column(apply_order(m.column(c), row_order), c);
    return static_cast<uint32_t>(el.rank());
}

std::vector<SpCol<ScalarK>> kernel_basis(const SparseMatrix& m) {
    Eliminator<ScalarK> el(true);
    for (uint32_t c = 0; c < m.cols; ++c) el.add_column(m.column(c), c);
    return el.kernel_combos();
}

std::optional<SpCol<ScalarK>> in_image(const SparseMatrix& m, const SpCol<ScalarK>& v) {
    Eliminator<ScalarK> el(true);
    for (uint32_t c = 0; c < m.cols; ++c) el.add_column(m.column(c), c);
    SpCol<ScalarK> combo;
    SpCol<ScalarK> rem = el.reduce(v, &combo);
    if (!rem.empty()) return std::nullopt;
    return combo;  // v = sum combo_j * column_j
}

uint32_t quotient_dim(const SparseMatrix& b_in, const SparseMatrix& z) {
    if (b_in.rows > z.rows) throw DimensionMismatch("boundary ambient exceeds kernel ambient");
    Eliminator<ScalarK> zel(true);
    for (uint32_t c = 0; c < z.cols; ++c) zel.add_column(z.column(c), c);
    uint32_t zdim = static_cast<uint32_t>(zel.rank());
    Eliminator<ScalarK> proj;
    for (uint32_t c = 0; c < b_in.cols; ++c) {
        SpCol<ScalarK> combo;
        SpCol<ScalarK> rem = zel.reduce(b_in.column(c), &combo);
        if (!rem.empty())
            throw ContainmentError("boundary column " + std::to_string(c) +
                                   " not contained in the kernel space (truncation-window bug)");
        proj.add_column(std::move(combo), c);
    }
    return zdim - static_cast<uint32_t>(proj.rank());
}

uint32_t rank_at(const SparseMatrix& m, const Rat& s0, const std::vector<uint32_t>& row_order) {
    Eliminator<Rat> el;
    for (uint32_t c = 0; c < m.cols; ++c)
        el.add_column(specialize(apply_order(m.column(c), row_order), s0), c);
    return static_cast<uint32_t>(el.rank());
}

uint32_t rank_with_shadow(const SparseMatrix& m, uint64_t seed) {
    uint32_t exact = rank(m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(2, 97), den(2, 97);
    auto draw = [&] {
        Rat r(num(rng), den(rng));
        r.canonicalize();
        return r;
    };
    int agree = 0, tries = 0;
    while (agree < 2 && tries < 5) {
        ++tries;
        try {
            if (rank_at(m, draw()) == exact) ++agree;
        } catch (const PoleError&) {
        }
    }
    if (agree < 2) throw ShadowMismatch("specialized ranks disagree with exact rank");
    return exact;
}

void export_triplets(const SparseMatrix& m, std::ostream& os) {
    os << "podles-matrix 1\n" << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
    for (uint32_t r = 0; r < m.row_labels.size(); ++r)
        os << "#row " << r << " " << m.row_labels[r] << "\n";
    for (uint32_t c = 0; c < m.col_labels.size(); ++c)
        os << "#col " << c << " " << m.col_labels[c] << "\n";
    for (const auto& [r, c, v] : m.entries) os << r << " " << c << " " << v.str() << "\n";
}

SparseMatrix import_triplets(std::istream& is) {
    std::string magic;
    int version;
    is >> magic >> version;
    if (magic != "podles-matrix") throw std::runtime_error("bad matrix header");
    SparseMatrix m;
    size_t nnz;
    is >> m.rows >> m.cols >> nnz;
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string kind;
            uint32_t idx;
            ls >> kind >> idx;
            std::string label;
            std::getline(ls, label);
            if (!label.empty() && label[0] == ' ') label.erase(0, 1);
            auto& vec = (kind == "row") ? m.row_labels : m.col_labels;
            if (vec.size() <= idx) vec.resize(idx + 1);
            vec[idx] = label;
            continue;
        }
        std::istringstream ls(line);
        uint32_t r, c;
        std::string sval;
        ls >> r >> c >> sval;
        m.entries.emplace_back(r, c, ScalarK::parse(sval));
    }
    if (m.entries.size() != nnz) throw std::runtime_error("triplet count mismatch");
    return m;
}

}  // namespace podles
