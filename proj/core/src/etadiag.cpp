#include "quatdec/etadiag.hpp"

#include <utility>

#include "quatdec/errors.hpp"

namespace quatdec {

namespace {

// M <- E M E^eta* and U <- E U for E = I + u * e_{s,t} (row s += u * row t,
// then the mirrored column update col s += col t * eta_conj(u)).
void congruence_add(QMatrix& M, QMatrix& U, std::size_t s, std::size_t t,
                    const Quaternion& u, EtaAxis eta) {
  const std::size_t n = M.rows();
  for (std::size_t c = 0; c < n; ++c) M(s, c) += u * M(t, c);
  for (std::size_t c = 0; c < U.cols(); ++c) U(s, c) += u * U(t, c);
  const Quaternion uc = eta_conj(u, eta);
  for (std::size_t r = 0; r < n; ++r) M(r, s) += M(r, t) * uc;
}

void congruence_swap(QMatrix& M, QMatrix& U, std::size_t s, std::size_t t) {
  const std::size_t n = M.rows();
  for (std::size_t c = 0; c < n; ++c) std::swap(M(s, c), M(t, c));
  for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(s, c), U(t, c));
  for (std::size_t r = 0; r < n; ++r) std::swap(M(r, s), M(r, t));
}

}  // namespace

EtaCongruenceDiag eta_congruence_diagonalize(const QMatrix& a, EtaAxis eta) {
  if (a.rows() != a.cols() || !is_eta_hermitian(a, eta))
    throw NotEtaHermitianError("eta_congruence_diagonalize: input must be a "
                               "square eta-Hermitian matrix");

  const std::size_t n = a.rows();
  QMatrix M = a;
  QMatrix U = QMatrix::identity(n);
  std::vector<Quaternion> diag;

  std::size_t k = 0;
  while (k < n) {
    // Prefer an existing nonzero diagonal pivot in the trailing block.
    std::size_t s = k;
    while (s < n && M(s, s).is_zero()) ++s;

    if (s == n) {
      // All trailing diagonal entries vanish; look for any nonzero entry.
      std::size_t ps = n, pt = n;
      for (std::size_t r = k; r < n && ps == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (!M(r, c).is_zero()) {
            ps = r;
            pt = c;
            break;
          }
      if (ps == n) break;  // trailing block is zero

      // Create a diagonal pivot at (ps, ps): row ps += u * row pt with the
      // mirrored column update makes M(ps,ps) = w + w^eta*, w = u*M(pt,ps).
      // For nonzero M(pt,ps) one of u = 1, u = eta works, since
      // w + w^eta* = 0 forces w into the eta axis and multiplying by eta
      // moves it out.
      bool created = false;
      for (const Quaternion& u :
           {Quaternion::one(), Quaternion::unit(eta)}) {
        const Quaternion w = u * M(pt, ps);
        if (!(w + eta_conj(w, eta)).is_zero()) {
          congruence_add(M, U, ps, pt, u, eta);
          created = true;
          break;
        }
      }
      if (!created)
        throw InternalError("eta_congruence_diagonalize: pivot creation failed");
      s = ps;
    }

    if (s != k) congruence_swap(M, U, k, s);

    const Quaternion d = M(k, k);
    const Quaternion dinv = inverse(d);
    for (std::size_t t = k + 1; t < n; ++t) {
      if (M(t, k).is_zero()) continue;
      congruence_add(M, U, t, k, -(M(t, k) * dinv), eta);
    }
    diag.push_back(d);
    ++k;
  }

  EtaCongruenceDiag out{std::move(U), std::move(diag), k};

  // Exactness check: the congruence must reproduce diag (+) 0 with no residue.
  QMatrix expect(n, n);
  for (std::size_t s = 0; s < out.rank; ++s) expect(s, s) = out.diag[s];
  if (out.U * a * eta_conj_transpose(out.U, eta) != expect)
    throw InternalError("eta_congruence_diagonalize: congruence residue");
  for (const Quaternion& d : out.diag)
    if (d.is_zero() || !is_eta_hermitian(d, eta))
      throw InternalError("eta_congruence_diagonalize: bad pivot");
  return out;
}

}  // namespace quatdec
