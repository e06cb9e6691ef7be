#include "relmach/square.hpp"

#include <stdexcept>

namespace relmach {

namespace {

void require_endo(const Rel& r, const Carrier& c, const char* name) {
  if (r.dom() != c || r.cod() != c) {
    throw std::invalid_argument(std::string("square: ") + name +
                                " is not an endo-relation on the carrier");
  }
}

}  // namespace

Square::Square(Carrier c, Rel pl, Rel lt, Rel rt, Rel pr)
    : carrier(std::move(c)),
      pass_left(std::move(pl)),
      left_turn(std::move(lt)),
      right_turn(std::move(rt)),
      pass_right(std::move(pr)) {
  require_endo(pass_left, carrier, "pass_left");
  require_endo(left_turn, carrier, "left_turn");
  require_endo(right_turn, carrier, "right_turn");
  require_endo(pass_right, carrier, "pass_right");
}

Square identity_square(const Carrier& c) {
  return Square(c, Rel::identity(c), Rel(c, c), Rel(c, c), Rel::identity(c));
}

Square zero_square(const Carrier& c) {
  return Square(c, Rel(c, c), Rel(c, c), Rel(c, c), Rel(c, c));
}

Square vcompose(const Square& second, const Square& first) {
  if (second.carrier != first.carrier) {
    throw std::invalid_argument("vcompose: carriers differ");
  }
  const Rel& e = second.pass_left;
  const Rel& f = second.left_turn;
  const Rel& g = second.right_turn;
  const Rel& h = second.pass_right;
  const Rel& a = first.pass_left;
  const Rel& b = first.left_turn;
  const Rel& c = first.right_turn;
  const Rel& d = first.pass_right;

  const Rel bg = star(b * g);
  const Rel gb = star(g * b);
  return Square(second.carrier,
                e * bg * a,
                f | (e * bg * b * h),
                c | (d * gb * g * a),
                d * gb * h);
}

Square hcompose(const Square& left, const Square& right) {
  if (left.carrier != right.carrier) {
    throw std::invalid_argument("hcompose: carriers differ");
  }
  // Frozen edge mapping: top = right_turn, bottom = left_turn, matching the
  // embedding vertical composition uses.
  const Rel& c = left.right_turn;
  const Rel& a = left.pass_left;
  const Rel& b = left.left_turn;
  const Rel& d = left.pass_right;
  const Rel& t = right.right_turn;
  const Rel& r = right.pass_left;
  const Rel& s = right.left_turn;
  const Rel& u = right.pass_right;

  const Rel dr = star(d * r);
  const Rel rd = star(r * d);
  return Square(left.carrier,
                a | (b * rd * r * c),
                b * rd * s,
                t * dr * c,
                u | (t * dr * d * s));
}

Square dual(const Square& s) {
  return Square(s.carrier, s.pass_right, s.right_turn, s.left_turn, s.pass_left);
}

}  // namespace relmach
