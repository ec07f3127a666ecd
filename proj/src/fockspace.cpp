#include "rabiqpt/fockspace.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "rabiqpt/csv.hpp"
#include "rabiqpt/error.hpp"

namespace rabiqpt {

FockSpace::FockSpace(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw InvalidParams("FockSpace: n_max must be >= 1");
}

// --- OperatorMatrix ---------------------------------------------------------

OperatorMatrix::OperatorMatrix(const FockSpace& space, Eigen::MatrixXcd entries)
    : OperatorMatrix(space, std::move(entries), false) {}

OperatorMatrix::OperatorMatrix(const FockSpace& space, Eigen::MatrixXcd entries,
                               bool hermitian)
    : space_(space), m_(std::move(entries)), hermitian_(hermitian) {
  if (m_.rows() != space_.dim() || m_.cols() != space_.dim()) {
    throw DimensionMismatch("OperatorMatrix: expected " +
                            std::to_string(space_.dim()) + "x" +
                            std::to_string(space_.dim()) + " entries");
  }
}

OperatorMatrix OperatorMatrix::hermitian(const FockSpace& space,
                                         Eigen::MatrixXcd entries) {
  OperatorMatrix op(space, std::move(entries), false);
  const double defect = op.hermiticity_defect();
  if (!(defect <= hermiticity_tolerance)) {
    throw NotHermitian("operator deviates from its adjoint by " +
                       std::to_string(defect));
  }
  op.hermitian_ = true;
  return op;
}

double OperatorMatrix::hermiticity_defect() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(space_, m_.adjoint(), hermitian_);
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  if (!(space_ == rhs.space_)) throw DimensionMismatch("operator spaces differ");
  return OperatorMatrix(space_, m_ + rhs.m_, hermitian_ && rhs.hermitian_);
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  if (!(space_ == rhs.space_)) throw DimensionMismatch("operator spaces differ");
  return OperatorMatrix(space_, m_ - rhs.m_, hermitian_ && rhs.hermitian_);
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (!(space_ == rhs.space_)) throw DimensionMismatch("operator spaces differ");
  return OperatorMatrix(space_, m_ * rhs.m_, false);
}

OperatorMatrix OperatorMatrix::operator*(double s) const {
  return OperatorMatrix(space_, m_ * s, hermitian_);
}

OperatorMatrix OperatorMatrix::operator*(cplx s) const {
  return OperatorMatrix(space_, m_ * s, hermitian_ && s.imag() == 0.0);
}

// --- StateVector ------------------------------------------------------------

StateVector::StateVector(const FockSpace& space, Eigen::VectorXcd amplitudes)
    : space_(space), amps_(std::move(amplitudes)) {
  if (amps_.size() != space_.dim()) {
    throw DimensionMismatch("StateVector: expected " +
                            std::to_string(space_.dim()) + " amplitudes");
  }
  const double n = amps_.norm();
  if (!(std::abs(n - 1.0) <= norm_tolerance)) {
    throw NotNormalized("StateVector: norm " + std::to_string(n));
  }
}

StateVector StateVector::normalized(const FockSpace& space,
                                    Eigen::VectorXcd amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw NotNormalized("StateVector: cannot normalize a zero vector");
  }
  amplitudes /= n;
  return StateVector(space, std::move(amplitudes));
}

StateVector StateVector::basis(const FockSpace& space, int n, AtomLevel s) {
  if (n < 0 || n > space.n_max()) {
    throw InvalidParams("basis state photon number out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(space.dim());
  v(space.index(n, s)) = 1.0;
  return StateVector(space, std::move(v));
}

cplx StateVector::overlap(const StateVector& other) const {
  if (!(space_ == other.space_)) throw DimensionMismatch("state spaces differ");
  return amps_.dot(other.amps_);  // conjugates the left operand
}

cplx StateVector::expectation(const OperatorMatrix& op) const {
  if (!(space_ == op.space())) throw DimensionMismatch("state/operator spaces differ");
  return amps_.dot(op.matrix() * amps_);
}

// --- Builders ---------------------------------------------------------------

OperatorMatrix identity(const FockSpace& space) {
  return OperatorMatrix::hermitian(
      space, Eigen::MatrixXcd::Identity(space.dim(), space.dim()));
}

OperatorMatrix annihilation(const FockSpace& space) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (int n = 1; n <= space.n_max(); ++n) {
    const double amp = std::sqrt(static_cast<double>(n));
    for (auto s : {AtomLevel::ground, AtomLevel::excited}) {
      m(space.index(n - 1, s), space.index(n, s)) = amp;
    }
  }
  return OperatorMatrix(space, std::move(m));
}

OperatorMatrix creation(const FockSpace& space) {
  return annihilation(space).adjoint();
}

OperatorMatrix number(const FockSpace& space) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (Eigen::Index i = 0; i < space.dim(); ++i) m(i, i) = space.photon_number(i);
  return OperatorMatrix::hermitian(space, std::move(m));
}

OperatorMatrix pauli(Pauli which, const FockSpace& space) {
  // Atom-factor matrix in the (g, e) basis.
  Eigen::Matrix2cd atom = Eigen::Matrix2cd::Zero();
  const cplx i(0.0, 1.0);
  constexpr int g = 0;
  constexpr int e = 1;
  switch (which) {
    case Pauli::x:
      atom(e, g) = 1.0;
      atom(g, e) = 1.0;
      break;
    case Pauli::y:
      atom(e, g) = -i;
      atom(g, e) = i;
      break;
    case Pauli::z:
      atom(e, e) = 1.0;
      atom(g, g) = -1.0;
      break;
    case Pauli::plus:
      atom(e, g) = 1.0;
      break;
    case Pauli::minus:
      atom(g, e) = 1.0;
      break;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (int n = 0; n <= space.n_max(); ++n) {
    m.block<2, 2>(space.index(n, AtomLevel::ground),
                  space.index(n, AtomLevel::ground)) = atom;
  }
  const bool herm = which == Pauli::x || which == Pauli::y || which == Pauli::z;
  return herm ? OperatorMatrix::hermitian(space, std::move(m))
              : OperatorMatrix(space, std::move(m));
}

CoherentAmplitudes coherent_state(cplx alpha, int n_max) {
  if (n_max < 0) throw InvalidParams("coherent_state: n_max must be >= 0");
  const double mean = std::norm(alpha);
  CoherentAmplitudes out;
  out.amplitudes.resize(n_max + 1);
  cplx c = std::exp(-0.5 * mean);
  out.amplitudes(0) = c;
  double p = std::norm(c);
  for (int n = 1; n <= n_max; ++n) {
    c *= alpha / std::sqrt(static_cast<double>(n));
    out.amplitudes(n) = c;
    p *= mean / n;
  }
  // Poisson tail beyond n_max, summed directly to avoid cancellation.
  double tail = 0.0;
  for (int n = n_max + 1; mean > 0.0; ++n) {
    p *= mean / n;
    tail += p;
    if (p <= 1e-18 * tail || p == 0.0) break;
  }
  out.tail_mass = tail;
  if (tail > CoherentAmplitudes::max_tail) {
    throw TailTooHeavy("coherent_state: truncated probability " +
                       std::to_string(tail) + " exceeds 1e-6; raise n_max");
  }
  out.amplitudes /= out.amplitudes.norm();
  return out;
}

StateVector product_state(const FockSpace& space, const std::array<cplx, 2>& atom,
                          const Eigen::VectorXcd& cavity) {
  if (cavity.size() != space.n_max() + 1) {
    throw DimensionMismatch("product_state: cavity amplitudes do not match n_max");
  }
  Eigen::VectorXcd v(space.dim());
  for (int n = 0; n <= space.n_max(); ++n) {
    v(space.index(n, AtomLevel::ground)) = atom[0] * cavity(n);
    v(space.index(n, AtomLevel::excited)) = atom[1] * cavity(n);
  }
  return StateVector::normalized(space, std::move(v));
}

OperatorMatrix jc_hamiltonian(const FockSpace& space, double omega0, double omega_c,
                              double g) {
  const OperatorMatrix a = annihilation(space);
  const OperatorMatrix ad = creation(space);
  const OperatorMatrix sp = pauli(Pauli::plus, space);
  const OperatorMatrix sm = pauli(Pauli::minus, space);
  const OperatorMatrix h =
      0.5 * omega0 * pauli(Pauli::z, space) + omega_c * number(space) + g * (ad * sm + a * sp);
  return OperatorMatrix::hermitian(space, h.matrix());
}

Eigensystem diagonalize(const OperatorMatrix& h) {
  if (!h.is_hermitian()) throw NotHermitian("diagonalize: operator not tagged Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error("diagonalize: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// --- Serialization ----------------------------------------------------------

void write_state_csv(std::ostream& out, const StateVector& state) {
  const auto& sp = state.space();
  csv::Writer w(out);
  w.meta("n_max", std::to_string(sp.n_max()));
  w.meta("basis", "index = 2*n + atom_level; atom_level 0 = g, 1 = e");
  w.header({"index", "n", "atom_level", "re", "im"});
  for (Eigen::Index i = 0; i < sp.dim(); ++i) {
    const cplx a = state.amplitudes()(i);
    w.row({static_cast<double>(i), static_cast<double>(sp.photon_number(i)),
           static_cast<double>(sp.atom_level(i)), a.real(), a.imag()});
  }
}

StateVector read_state_csv(std::istream& in) {
  const csv::Table t = csv::read(in);
  const int n_max = std::stoi(t.meta_value("n_max"));
  const FockSpace sp(n_max);
  if (static_cast<Eigen::Index>(t.rows.size()) != sp.dim()) {
    throw DimensionMismatch("state csv: row count does not match n_max");
  }
  Eigen::VectorXcd v(sp.dim());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto i = static_cast<Eigen::Index>(t.number(r, "index"));
    const int n = static_cast<int>(t.number(r, "n"));
    const auto s = static_cast<AtomLevel>(static_cast<int>(t.number(r, "atom_level")));
    if (i != sp.index(n, s)) throw InvalidParams("state csv: inconsistent basis ordering");
    v(i) = cplx(t.number(r, "re"), t.number(r, "im"));
  }
  return StateVector(sp, std::move(v));
}

}  // namespace rabiqpt
