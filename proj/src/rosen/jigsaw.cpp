// Exact self-tiling certificate for the planar extension.
//
// The extension map sends each cylinder piece (the part of a branch cylinder
// lying in one domain rectangle) onto an exact rectangle: the x-side is the
// image of the piece under the branch, and the y-side is determined by the
// branch data and the source rectangle's height.  Bijectivity (mod null sets)
// is equivalent to those image rectangles tiling the domain.  Only finitely
// many pieces are checked individually: branches with index >= d_star live
// entirely inside the rectangles adjacent to zero and their images are
// full-width strips that telescope down to height zero precisely when the
// heights adjacent to zero sum to lambda.
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rosen/natext.hpp"

namespace rosen {

namespace {

using A = AlgebraicNumber;

struct Piece {
  int rect = 0;
  int eps = 0;
  long d = 0;
  A x_lo, x_hi;  // image interval on the x-axis (closed hull)
  A y_lo, y_hi;  // image interval on the y-axis
};

const A& amin(const A& a, const A& b) { return b < a ? b : a; }
const A& amax(const A& a, const A& b) { return a < b ? b : a; }

}  // namespace

JigsawCertificate verify_bijectivity(const Params& P) {
  JigsawCertificate cert;
  Domain D = build_domain(P);
  cert.regime = D.regime;
  const FieldPtr& f = P.field();
  const A lam = P.lambda();
  const A zero = A::zero(f);
  auto fail = [&](std::string msg) { cert.failures.push_back(std::move(msg)); };

  // Heights adjacent to zero, and the outer bounds of the rectangles they
  // belong to (the reach of the finite piece enumeration on each side).
  const Rect& Z = D.rects[std::size_t(D.zero_rect)];
  A HL = zero, HR = zero;
  bool has_left = false;
  A L_lo = zero, R_hi = zero;
  if (Z.lo.is_zero()) {
    HR = Z.height;
    R_hi = Z.hi;
    if (D.zero_rect > 0) {
      const Rect& W = D.rects[std::size_t(D.zero_rect - 1)];
      HL = W.height;
      L_lo = W.lo;
      has_left = true;
    }
  } else {
    HL = HR = Z.height;
    L_lo = Z.lo;
    R_hi = Z.hi;
    has_left = true;
  }

  cert.tail_lemma_ok = HL + HR == lam;
  if (!cert.tail_lemma_ok)
    fail("zero-adjacent heights sum to " + (HL + HR).decimal(25) +
         ", expected lambda");

  // Smallest branch index whose whole cylinder (on both signs) sits inside
  // the zero-adjacent rectangles.
  A bound = has_left ? amin(R_hi, -L_lo) : R_hi;
  long dstar = 2;
  while (!(P.delta(dstar - 1) <= bound)) ++dstar;
  cert.d_star = dstar;

  std::vector<Piece> pieces;
  auto push_piece = [&](int ri, int eps, long d, const A& u, const A& w) {
    const A& H = D.rects[std::size_t(ri)].height;
    A dl = A::from_long(f, d) * lam;
    A x_lo, x_hi, y_lo, y_hi;
    if (eps < 0) {
      // branch -1/x - d*lam, increasing on [u, w]
      x_lo = (-u).inverse() - dl;
      x_hi = (-w).inverse() - dl;
      A den = dl - H;
      if (!(den.sgn() > 0)) {
        fail("branch d=" + std::to_string(d) + " has d*lam - H <= 0 in " +
             D.rects[std::size_t(ri)].label);
        return;
      }
      y_lo = dl.inverse();
      y_hi = den.inverse();
    } else {
      // branch 1/x - d*lam, decreasing on [u, w]
      x_lo = w.inverse() - dl;
      x_hi = u.inverse() - dl;
      y_lo = (dl + H).inverse();
      y_hi = dl.inverse();
    }
    pieces.push_back({ri, eps, d, x_lo, x_hi, y_lo, y_hi});
  };

  for (int i = 0; i < int(D.rects.size()); ++i) {
    const Rect& rc = D.rects[std::size_t(i)];
    if (rc.lo.sgn() < 0) {
      bool to_zero = rc.hi.sgn() >= 0;
      A bneg = to_zero ? zero : rc.hi;
      long d = digit_of(P, rc.lo).d;
      for (;;) {
        if (to_zero && d >= dstar) break;
        A u = amax(rc.lo, -P.delta(d - 1));
        A w = amin(bneg, -P.delta(d));
        if (u < w) push_piece(i, -1, d, u, w);
        if (!to_zero && !(-P.delta(d) < bneg)) break;
        ++d;
        if (d > dstar + 1000)
          throw std::logic_error("runaway branch enumeration (negative side)");
      }
    }
    if (rc.hi.sgn() > 0) {
      bool from_zero = rc.lo.sgn() <= 0;
      A apos = from_zero ? zero : rc.lo;
      long d = digit_of(P, rc.hi).d;
      for (;;) {
        if (from_zero && d >= dstar) break;
        A u = amax(apos, P.delta(d));
        A w = amin(rc.hi, P.delta(d - 1));
        if (u < w) push_piece(i, +1, d, u, w);
        if (!from_zero && !(apos < P.delta(d))) break;
        ++d;
        if (d > dstar + 1000)
          throw std::logic_error("runaway branch enumeration (positive side)");
      }
    }
  }
  cert.finite_pieces = int(pieces.size());

  // Top of the telescoping tail of full-width strips.
  A tail_top = (A::from_long(f, dstar) * lam - HL).inverse();

  // Sweep the x-breakpoints; on each slab the piece images must stack from
  // the tail top to the rectangle height with exact matching endpoints.
  std::vector<A> xs;
  xs.reserve(pieces.size() * 2 + D.rects.size() + 1);
  for (const Piece& pc : pieces) {
    xs.push_back(pc.x_lo);
    xs.push_back(pc.x_hi);
  }
  for (const Rect& rc : D.rects) xs.push_back(rc.lo);
  xs.push_back(D.rects.back().hi);
  std::sort(xs.begin(), xs.end(), [](const A& a, const A& b) { return a < b; });
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](const A& a, const A& b) { return a == b; }),
           xs.end());
  if (!(xs.front() == P.ell0() && xs.back() == P.r0()))
    fail("piece images reach past the fundamental interval");

  cert.slabs = int(xs.size()) - 1;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const A& u = xs[s];
    const A& w = xs[s + 1];
    std::string where = "slab [" + u.decimal(20) + ", " + w.decimal(20) + ")";
    int ri = D.rect_index_of(u);
    if (ri < 0 || !(w <= D.rects[std::size_t(ri)].hi)) {
      fail(where + " does not sit inside one rectangle");
      continue;
    }
    const A& Hslab = D.rects[std::size_t(ri)].height;

    std::vector<const Piece*> cover;
    bool partial = false;
    for (const Piece& pc : pieces) {
      bool covers = pc.x_lo <= u && w <= pc.x_hi;
      bool meets = pc.x_lo < w && u < pc.x_hi;
      if (covers != meets) partial = true;
      if (covers) cover.push_back(&pc);
    }
    if (partial) {
      fail(where + " partially overlapped by a piece image");
      continue;
    }
    std::sort(cover.begin(), cover.end(),
              [](const Piece* a, const Piece* b) { return a->y_lo < b->y_lo; });
    const A* cur = &tail_top;
    bool good = true;
    for (const Piece* pc : cover) {
      if (!(pc->y_lo == *cur)) {
        fail(where + " y-gap: next piece starts at " + pc->y_lo.decimal(25) +
             ", expected " + cur->decimal(25));
        good = false;
        break;
      }
      cur = &pc->y_hi;
    }
    if (good && !(*cur == Hslab))
      fail(where + " tops out at " + cur->decimal(25) + ", expected " +
           Hslab.decimal(25));
  }

  cert.ok = cert.tail_lemma_ok && cert.failures.empty();
  return cert;
}

}  // namespace rosen
