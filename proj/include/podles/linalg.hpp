#pragma once

#include "podles/scalar.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace podles {

// Sparse exact linear algebra over K = Q(s) (and its rational specializations).
// Columns are reduced left-looking against an echelon pivot set; the row order
// (rank) is chosen by the caller and fully determines the elimination.

inline constexpr uint32_t kNoPivot = std::numeric_limits<uint32_t>::max();

template <class F>
struct SpCol {
    // entries sorted by row rank, no zeros
    std::vector<std::pair<uint32_t, F>> e;
    bool empty() const { return e.empty(); }
    void clear() { e.clear(); }
};

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<ScalarK> {
    static bool is_zero(const ScalarK& x) { return x.is_zero(); }
    static ScalarK one() { return ScalarK::one(); }
    static ScalarK div(const ScalarK& a, const ScalarK& b) { return a / b; }
};

template <>
struct FieldTraits<Rat> {
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat one() { return Rat(1); }
    static Rat div(const Rat& a, const Rat& b) { return a / b; }
};

// Left-looking echelon eliminator. Pivot of a column = its minimal-rank row.
// Pivot columns are stored normalized (pivot entry 1).
template <class F>
class Eliminator {
  public:
    explicit Eliminator(bool track_combos = false) : track_(track_combos) {}

    // Reduces col against the pivots; installs the remainder as a new pivot
    // if nonzero. Returns the pivot row rank, or kNoPivot if it vanished.
    // `tag` identifies the column in combination tracking.
    uint32_t add_column(SpCol<F> col, uint32_t tag = 0);

    // Reduce an external vector; returns the remainder. If combo != nullptr
    // and tracking is on, *combo receives coefficients x with
    // remainder = v - sum x_i * column_i (over previously added columns).
    SpCol<F> reduce(SpCol<F> v, SpCol<F>* combo = nullptr) const;

    size_t rank() const { return pivots_.size(); }
    bool has_pivot_at(uint32_t rank_row) const;
    const std::vector<std::pair<uint32_t, uint32_t>>& pivot_log() const { return pivot_log_; }

    // kernel combinations collected from columns that reduced to zero
    const std::vector<SpCol<F>>& kernel_combos() const { return kernel_combos_; }

  private:
    struct Pivot {
        SpCol<F> col;    // normalized, entries from rank(row) upward
        SpCol<F> combo;  // expression in source column tags (if tracked)
    };
    bool track_;
    std::vector<Pivot> pivots_;
    std::vector<int32_t> pivot_at_;                        // row rank -> pivot index or -1
    std::vector<std::pair<uint32_t, uint32_t>> pivot_log_; // (tag, pivot rank) per installed pivot
    std::vector<SpCol<F>> kernel_combos_;

    void axpy(SpCol<F>& dst, const F& f, const SpCol<F>& src) const;
};

// Matrix in triplet form with labels, the module-level interface.
struct SparseMatrix {
    uint32_t rows = 0, cols = 0;
    std::vector<std::tuple<uint32_t, uint32_t, ScalarK>> entries;
    std::vector<std::string> row_labels, col_labels;  // optional, sized or empty

    void add(uint32_t r, uint32_t c, ScalarK v);
    SpCol<ScalarK> column(uint32_t c) const;  // entries sorted by row index
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct ContainmentError : std::runtime_error {
    explicit ContainmentError(const std::string& w) : std::runtime_error(w) {}
};
struct ShadowMismatch : std::runtime_error {
    explicit ShadowMismatch(const std::string& w) : std::runtime_error(w) {}
};

// exact rank; row_order empty = identity (rank of row i = i)
uint32_t rank(const SparseMatrix& m, const std::vector<uint32_t>& row_order = {});

// basis of the right kernel as sparse coefficient vectors over columns
std::vector<SpCol<ScalarK>> kernel_basis(const SparseMatrix& m);

// membership of v in the column space; returns a preimage witness when true
std::optional<SpCol<ScalarK>> in_image(const SparseMatrix& m, const SpCol<ScalarK>& v);

// dim Z - rank(projection of B_in's image into Z's coordinates); the columns
// of z span Z inside the common ambient row space. Containment is verified.
uint32_t quotient_dim(const SparseMatrix& b_in, const SparseMatrix& z);

// rank at a rational specialization s = s0 (exact over Q)
uint32_t rank_at(const SparseMatrix& m, const Rat& s0, const std::vector<uint32_t>& row_order = {});

// exact rank confirmed by evaluation at two random rational points; a lucky
// third draw resolves disagreements, otherwise hard error
uint32_t rank_with_shadow(const SparseMatrix& m, uint64_t seed = 0x5eed);

// text triplet I/O (canonical scalar form)
void export_triplets(const SparseMatrix& m, std::ostream& os);
SparseMatrix import_triplets(std::istream& is);

extern template class Eliminator<ScalarK>;
extern template class Eliminator<Rat>;

}  // namespace podles
