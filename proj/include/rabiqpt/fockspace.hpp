#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <iosfwd>

namespace rabiqpt {

using cplx = std::complex<double>;

enum class AtomLevel : int { ground = 0, excited = 1 };

// Truncated atom (x) cavity space with photon numbers 0..n_max.
//
// Basis ordering: index = 2 * n + s, s = 0 for |g>, s = 1 for |e>. The atom
// index runs fastest; serialized states rely on this ordering.
class FockSpace {
 public:
  static constexpr int default_n_max = 30;

  explicit FockSpace(int n_max = default_n_max);

  int n_max() const { return n_max_; }
  Eigen::Index dim() const { return 2 * (static_cast<Eigen::Index>(n_max_) + 1); }

  Eigen::Index index(int n, AtomLevel s) const {
    return 2 * static_cast<Eigen::Index>(n) + static_cast<int>(s);
  }
  int photon_number(Eigen::Index i) const { return static_cast<int>(i / 2); }
  AtomLevel atom_level(Eigen::Index i) const {
    return static_cast<AtomLevel>(static_cast<int>(i % 2));
  }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int n_max_;
};

// Dense complex operator on a FockSpace. A Hermitian tag is only granted
// after checking M == M^dagger entrywise to 1e-12.
class OperatorMatrix {
 public:
  static constexpr double hermiticity_tolerance = 1e-12;

  OperatorMatrix(const FockSpace& space, Eigen::MatrixXcd entries);

  // Tags the result Hermitian; throws NotHermitian if the check fails.
  static OperatorMatrix hermitian(const FockSpace& space,
                                  Eigen::MatrixXcd entries);

  const FockSpace& space() const { return space_; }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  bool is_hermitian() const { return hermitian_; }

  // Largest entrywise deviation |M - M^dagger|.
  double hermiticity_defect() const;

  OperatorMatrix adjoint() const;

  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator*(double s) const;
  OperatorMatrix operator*(cplx s) const;
  friend OperatorMatrix operator*(double s, const OperatorMatrix& op) {
    return op * s;
  }
  friend OperatorMatrix operator*(cplx s, const OperatorMatrix& op) {
    return op * s;
  }

 private:
  OperatorMatrix(const FockSpace& space, Eigen::MatrixXcd entries,
                 bool hermitian);

  FockSpace space_;
  Eigen::MatrixXcd m_;
  bool hermitian_ = false;
};

// Normalized state vector. Construction enforces |psi| = 1 within 1e-10.
class StateVector {
 public:
  static constexpr double norm_tolerance = 1e-10;

  StateVector(const FockSpace& space, Eigen::VectorXcd amplitudes);

  // Rescales to unit norm; throws NotNormalized for a zero vector.
  static StateVector normalized(const FockSpace& space,
                                Eigen::VectorXcd amplitudes);
  static StateVector basis(const FockSpace& space, int n, AtomLevel s);

  const FockSpace& space() const { return space_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  cplx amplitude(int n, AtomLevel s) const { return amps_(space_.index(n, s)); }
  double norm() const { return amps_.norm(); }

  // <this|other>
  cplx overlap(const StateVector& other) const;
  // <this|op|this>
  cplx expectation(const OperatorMatrix& op) const;

 private:
  FockSpace space_;
  Eigen::VectorXcd amps_;
};

OperatorMatrix identity(const FockSpace& space);
OperatorMatrix annihilation(const FockSpace& space);
OperatorMatrix creation(const FockSpace& space);
OperatorMatrix number(const FockSpace& space);

enum class Pauli { x, y, z, plus, minus };

// sigma_z |e> = +|e>, sigma_plus |g> = |e>; identity on the cavity.
OperatorMatrix pauli(Pauli which, const FockSpace& space);

// Cavity amplitudes c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), n <= n_max,
// renormalized after truncation.
struct CoherentAmplitudes {
  static constexpr double warn_tail = 1e-12;
  static constexpr double max_tail = 1e-6;

  Eigen::VectorXcd amplitudes;
  double tail_mass = 0.0;  // Poisson weight beyond n_max before renormalizing

  bool tail_warning() const { return tail_mass > warn_tail; }
};

// Throws TailTooHeavy if the dropped probability exceeds 1e-6.
CoherentAmplitudes coherent_state(cplx alpha, int n_max);

// atom (x) cavity, normalized. atom = {c_g, c_e}.
StateVector product_state(const FockSpace& space, const std::array<cplx, 2>& atom,
                          const Eigen::VectorXcd& cavity);

// omega0 sz / 2 + omega_c a^dag a + g (a^dag s- + a s+), assembled from the
// operator builders above.
OperatorMatrix jc_hamiltonian(const FockSpace& space, double omega0, double omega_c, double g);

struct Eigensystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // columns, orthonormal
};

// Throws NotHermitian unless h carries the Hermitian tag.
Eigensystem diagonalize(const OperatorMatrix& h);

// CSV columns: index, n, atom_level, re, im.
void write_state_csv(std::ostream& out, const StateVector& state);
StateVector read_state_csv(std::istream& in);

}  // namespace rabiqpt
