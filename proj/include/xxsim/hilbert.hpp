#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace xxsim {

using Complex = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

/// Computational-basis subspace with a fixed number of excitations.
///
/// States are stored as bitmasks (bit i = site i excited, LSB = site 0),
/// sorted strictly ascending by integer value. The inverse map state->ordinal
/// is a binary search over the sorted list.
class BasisSector {
public:
    /// Enumerate all C(num_sites, num_excitations) bitmasks.
    /// Requires 0 <= num_excitations <= num_sites <= 24.
    static BasisSector enumerate(int num_sites, int num_excitations);

    int num_sites() const { return num_sites_; }
    int num_excitations() const { return num_excitations_; }
    std::int64_t dim() const { return static_cast<std::int64_t>(states_.size()); }
    std::uint32_t state(std::int64_t ordinal) const { return states_[static_cast<std::size_t>(ordinal)]; }
    const std::vector<std::uint32_t>& states() const { return states_; }

    /// Ordinal of a bitmask within the sector; throws if absent.
    std::int64_t index_of(std::uint32_t bits) const;
    bool contains(std::uint32_t bits) const;

private:
    BasisSector(int n, int k, std::vector<std::uint32_t> states)
        : num_sites_(n), num_excitations_(k), states_(std::move(states)) {}

    int num_sites_ = 0;
    int num_excitations_ = 0;
    std::vector<std::uint32_t> states_;
};

/// Occupation-number basis for truncated bosons: all occupation vectors with
/// a fixed total quanta count and per-site occupation < local_dim.
/// Requires num_sites <= 16 and local_dim <= 16 (occupations packed 4 bits/site).
class BosonBasis {
public:
    static BosonBasis enumerate(int num_sites, int total_quanta, int local_dim);

    int num_sites() const { return num_sites_; }
    int total_quanta() const { return total_quanta_; }
    int local_dim() const { return local_dim_; }
    std::int64_t dim() const { return static_cast<std::int64_t>(occupations_.size()); }
    const std::vector<std::uint8_t>& occupation(std::int64_t ordinal) const {
        return occupations_[static_cast<std::size_t>(ordinal)];
    }
    std::int64_t index_of(const std::vector<std::uint8_t>& occ) const;

    static std::uint64_t pack(const std::vector<std::uint8_t>& occ);

private:
    int num_sites_ = 0;
    int total_quanta_ = 0;
    int local_dim_ = 2;
    std::vector<std::vector<std::uint8_t>> occupations_;
    std::unordered_map<std::uint64_t, std::int64_t> index_;
};

class DensityMatrix;

struct SectorComponent {
    BasisSector sector;
    VectorXc amplitudes;
};

/// Normalized pure state stored as one amplitude vector per excitation
/// sector it overlaps. Product states occupy one sector; EPR-seeded states
/// occupy two. Immutable after construction.
class PureState {
public:
    PureState(int num_sites, std::vector<SectorComponent> components);

    /// |bits> as a computational-basis product state in its sector.
    static PureState product_state(std::uint32_t bits, int num_sites);

    /// (|00> + |11>)/sqrt(2) on (site_a, site_b) tensored with |rest_bits>.
    /// The pair sites must not appear in rest_bits.
    static PureState epr_seeded(int site_a, int site_b, std::uint32_t rest_bits, int num_sites);

    /// Decompose a full 2^N amplitude vector into sector components
    /// (index = bitmask). Requires num_sites <= 24 and a normalized input.
    static PureState from_full_vector(const VectorXc& amplitudes, int num_sites);

    int num_sites() const { return num_sites_; }
    const std::vector<SectorComponent>& components() const { return components_; }

    /// Embed back into the full 2^N space (num_sites <= 24).
    VectorXc full_vector() const;

    double norm() const;
    double site_density(int site) const;   // <n_i>
    double total_excitation() const;       // <N_total>
    Complex overlap(const PureState& other) const;

private:
    int num_sites_ = 0;
    std::vector<SectorComponent> components_;  // sorted by excitation number
};

struct SectorWeight {
    BasisSector sector;
    PureState component;  // normalized
    double weight;        // squared norm of the projection
};

/// Split a state into normalized per-sector components with weights; weights
/// sum to one and re-assembly reproduces the input.
std::vector<SectorWeight> sector_decompose(const PureState& state);

/// Hermitian, unit-trace matrix over an ordered qubit subset. Row/column
/// index bit k corresponds to sites()[k]; site labels are kept sorted
/// ascending.
class DensityMatrix {
public:
    DensityMatrix(std::vector<int> sites, MatrixXc matrix);

    static DensityMatrix maximally_mixed(std::vector<int> sites);
    static DensityMatrix from_pure(const PureState& psi);  // full-system projector

    const std::vector<int>& sites() const { return sites_; }
    const MatrixXc& matrix() const { return matrix_; }
    int num_sites() const { return static_cast<int>(sites_.size()); }
    std::int64_t dim() const { return matrix_.rows(); }

    double site_density(int site) const;  // <n_i> from the diagonal
    double min_eigenvalue() const;

private:
    std::vector<int> sites_;
    MatrixXc matrix_;
};

/// Reduced density matrix on `keep` (nonempty subset of the system sites).
DensityMatrix partial_trace(const PureState& psi, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Gather the bits of `bits` at the (sorted) positions in `sites` into a
/// compact index: result bit k = bit sites[k] of the input.
std::uint32_t gather_bits(std::uint32_t bits, const std::vector<int>& sites);

std::uint64_t binomial(int n, int k);

}  // namespace xxsim
