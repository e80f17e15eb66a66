#include "sqcx/library.hpp"

#include <map>

namespace sqcx {

namespace {

const Rational kHalf{Int(1), Int(2)};
const Rational kQuarter{Int(1), Int(4)};

Scheme make(std::string name, std::vector<std::string> in,
            std::vector<std::string> out, std::vector<Stage> stages,
            std::optional<std::string> erratum = std::nullopt) {
  Scheme s;
  s.name = std::move(name);
  s.input_labels = std::move(in);
  s.output_labels = std::move(out);
  s.stages = std::move(stages);
  s.known_erratum = std::move(erratum);
  return s;
}

// --- squaring -------------------------------------------------------

// (a+jb)^2 from a*a, b*b and one general product a*b.
Scheme square_direct() {
  return make("square_direct", {"a1", "b1"}, {"c1", "d1"},
              {BinaryStage{{BinaryOp::copy(0), BinaryOp::copy(1),
                            BinaryOp::mul(0, 1)}},
               UnaryStage{{UnaryOp::square(0), UnaryOp::square(1),
                           UnaryOp::copy(2)}},
               LinearStage{mat({{1, -1, 0}, {0, 0, 2}})}});
}

// Three-squarer squaring scheme with the stage matrices exactly as
// printed. The recombination leaves the real output at a1^2 + b1^2
// instead of a1^2 - b1^2.
Scheme square_eq6_as_printed() {
  return make(
      "square_eq6_as_printed", {"a1", "b1"}, {"c1", "d1"},
      {LinearStage{mat({{1, 0}, {0, 1}, {1, 1}})},
       UnaryStage{{UnaryOp::square(0), UnaryOp::square(1), UnaryOp::square(2)}},
       LinearStage{mat({{1, 1, 0}, {0, 0, 1}})},
       LinearStage{mat({{1, 0}, {-1, 1}})}},
      "as printed, the real output evaluates to a1^2 + b1^2; complex "
      "squaring needs a1^2 - b1^2 (one sign in the recombination is off "
      "by 2*b1^2)");
}

// Same three squares, recombined correctly; costs one extra adder.
Scheme square_logan_corrected() {
  return make(
      "square_logan_corrected", {"a1", "b1"}, {"c1", "d1"},
      {LinearStage{mat({{1, 0}, {0, 1}, {1, 1}})},
       UnaryStage{{UnaryOp::square(0), UnaryOp::square(1), UnaryOp::square(2)}},
       LinearStage{mat({{1, -1, 0}, {-1, -1, 1}})}});
}

// --- multiplication -------------------------------------------------

Scheme mul_direct() {
  return make("mul_direct", {"a1", "b1", "a2", "b2"}, {"c1", "d1"},
              {BinaryStage{{BinaryOp::mul(0, 2), BinaryOp::mul(1, 3),
                            BinaryOp::mul(0, 3), BinaryOp::mul(1, 2)}},
               LinearStage{mat({{1, -1, 0, 0}, {0, 0, 1, 1}})}});
}

// Three-multiplier form: m1 = a2(a1+b1), m2 = a1(b2-a2), m3 = b1(a2+b2).
Scheme mul_gauss() {
  return make("mul_gauss", {"a1", "b1", "a2", "b2"}, {"c1", "d1"},
              {LinearStage{mat({{1, 1, 0, 0},
                                {0, 0, -1, 1},
                                {0, 0, 1, 1},
                                {0, 0, 1, 0},
                                {1, 0, 0, 0},
                                {0, 1, 0, 0}})},
               BinaryStage{{BinaryOp::mul(0, 3), BinaryOp::mul(1, 4),
                            BinaryOp::mul(2, 5)}},
               LinearStage{mat({{1, 0, -1}, {1, 1, 0}})}});
}

// Six-squarer multiplication scheme: pair/difference stage, three
// butterflies, squares, quarter-square differences, recombination,
// then the 1/4 normalization as two shifts.
Scheme mul_eq7() {
  RMatrix h2 = mat({{1, 1}, {1, -1}});
  return make("mul_eq7", {"a1", "b1", "a2", "b2"}, {"c1", "d1"},
              {LinearStage{mat({{0, 0, 1, -1},
                                {1, 0, 0, 0},
                                {0, 0, 1, 1},
                                {0, 1, 0, 0},
                                {0, 0, 0, 1},
                                {1, -1, 0, 0}})},
               LinearStage{kron(identity(3), h2)},
               UnaryStage{{UnaryOp::square(0), UnaryOp::square(1),
                           UnaryOp::square(2), UnaryOp::square(3),
                           UnaryOp::square(4), UnaryOp::square(5)}},
               LinearStage{mat({{1, -1, 0, 0, 0, 0},
                                {0, 0, 1, -1, 0, 0},
                                {0, 0, 0, 0, 1, -1}})},
               LinearStage{mat({{1, 0, 1}, {0, 1, 1}})},
               UnaryStage{{UnaryOp::scale(0, kQuarter),
                           UnaryOp::scale(1, kQuarter)}}});
}

// --- division -------------------------------------------------------

Scheme div_direct() {
  return make("div_direct", {"a1", "b1", "a2", "b2"}, {"c3", "d3"},
              {BinaryStage{{BinaryOp::mul(0, 2), BinaryOp::mul(1, 3),
                            BinaryOp::mul(1, 2), BinaryOp::mul(0, 3),
                            BinaryOp::copy(2), BinaryOp::copy(3)}},
               UnaryStage{{UnaryOp::copy(0), UnaryOp::copy(1), UnaryOp::copy(2),
                           UnaryOp::copy(3), UnaryOp::square(4),
                           UnaryOp::square(5)}},
               LinearStage{mat({{1, 1, 0, 0, 0, 0},
                                {0, 0, 1, -1, 0, 0},
                                {0, 0, 0, 0, 1, 1}})},
               BinaryStage{{BinaryOp::div(0, 2), BinaryOp::div(1, 2)}}});
}

// Shared front of the eight-squarer division schemes: duplicate the
// four inputs, form the printed pairwise sums alongside the four
// pass-throughs, square everything. Input order is [a1, a2, b1, b2].
std::vector<Stage> div_squaring_front() {
  return {LinearStage{kron(ones_column(2), identity(4))},
          LinearStage{mat({{1, 1, 0, 0, 0, 0, 0, 0},
                           {0, 0, 1, 1, 0, 0, 0, 0},
                           {0, 1, 1, 0, 0, 0, 0, 0},
                           {1, 0, 0, 1, 0, 0, 0, 0},
                           {0, 0, 0, 0, 1, 0, 0, 0},
                           {0, 0, 0, 0, 0, 0, 1, 0},
                           {0, 0, 0, 0, 0, 1, 0, 0},
                           {0, 0, 0, 0, 0, 0, 0, 1}})},
          UnaryStage{{UnaryOp::square(0), UnaryOp::square(1), UnaryOp::square(2),
                      UnaryOp::square(3), UnaryOp::square(4), UnaryOp::square(5),
                      UnaryOp::square(6), UnaryOp::square(7)}}};
}

// Eight-squarer division scheme with the combining matrices exactly as
// printed (plus a pass-through row that keeps the divisor magnitude
// wire alive, so the doubling before the dividers stays a shift). The
// imaginary numerator comes out 2(a2*b1 - a1*b2) - 2(a1^2 + b2^2).
Scheme div_eq8_as_printed() {
  std::vector<Stage> stages = div_squaring_front();
  stages.push_back(LinearStage{mat({{1, 1, 0, 0, 0, 0, 0, 0},
                                    {0, 0, 1, -1, 0, 0, 0, 0},
                                    {0, 0, 0, 0, 1, 1, 0, 0},
                                    {0, 0, 0, 0, 0, 0, 1, 1}})});
  stages.push_back(LinearStage{
      mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}})});
  stages.push_back(
      LinearStage{mat({{1, 0, -1, 0}, {0, 1, -1, 0}, {0, 0, 0, 2}})});
  stages.push_back(BinaryStage{{BinaryOp::div(0, 2), BinaryOp::div(1, 2)}});
  return make(
      "div_eq8_as_printed", {"a1", "a2", "b1", "b2"}, {"c3", "d3"},
      std::move(stages),
      "as printed, the imaginary output differs from the quotient by "
      "-2*(a1^2 + b2^2) over the common denominator 2*(a2^2 + b2^2)");
}

// Same squaring front, with the post-squaring combinations regrouped so
// both numerators cancel correctly; costs two extra adders.
Scheme div_logan_corrected() {
  std::vector<Stage> stages = div_squaring_front();
  stages.push_back(LinearStage{mat({{1, 1, 0, 0, 0, 0, 0, 0},
                                    {0, 0, 1, -1, 0, 0, 0, 0},
                                    {0, 0, 0, 0, 1, 0, 0, 1},
                                    {0, 0, 0, 0, 0, 1, 1, 0},
                                    {0, 0, 0, 0, 0, 0, 1, 1}})});
  stages.push_back(LinearStage{
      mat({{1, 0, -1, -1, 0}, {0, 1, 1, -1, 0}, {0, 0, 0, 0, 2}})});
  stages.push_back(BinaryStage{{BinaryOp::div(0, 2), BinaryOp::div(1, 2)}});
  return make("div_logan_corrected", {"a1", "a2", "b1", "b2"}, {"c3", "d3"},
              std::move(stages));
}

// Divide by multiplying with the conjugate: the six-squarer product
// stages widened by two pass-through wires that carry a2 and b2 into
// the divisor magnitude a2^2 + b2^2.
Scheme div_via_conjugate_mul() {
  RMatrix h2 = mat({{1, 1}, {1, -1}});
  RMatrix butterfly = zeros(8, 8);
  butterfly.topLeftCorner(6, 6) = kron(identity(3), h2);
  butterfly.bottomRightCorner(2, 2) = identity(2);

  return make(
      "div_via_conjugate_mul", {"a1", "b1", "a2", "b2"}, {"c3", "d3"},
      {// negate b2, keep a copy of a2 and b2 for the denominator
       LinearStage{mat({{1, 0, 0, 0},
                        {0, 1, 0, 0},
                        {0, 0, 1, 0},
                        {0, 0, 0, -1},
                        {0, 0, 1, 0},
                        {0, 0, 0, 1}})},
       // product pair/difference stage, widened by the two carries
       LinearStage{mat({{0, 0, 1, -1, 0, 0},
                        {1, 0, 0, 0, 0, 0},
                        {0, 0, 1, 1, 0, 0},
                        {0, 1, 0, 0, 0, 0},
                        {0, 0, 0, 1, 0, 0},
                        {1, -1, 0, 0, 0, 0},
                        {0, 0, 0, 0, 1, 0},
                        {0, 0, 0, 0, 0, 1}})},
       LinearStage{std::move(butterfly)},
       UnaryStage{{UnaryOp::square(0), UnaryOp::square(1), UnaryOp::square(2),
                   UnaryOp::square(3), UnaryOp::square(4), UnaryOp::square(5),
                   UnaryOp::square(6), UnaryOp::square(7)}},
       LinearStage{mat({{1, -1, 0, 0, 0, 0, 0, 0},
                        {0, 0, 1, -1, 0, 0, 0, 0},
                        {0, 0, 0, 0, 1, -1, 0, 0},
                        {0, 0, 0, 0, 0, 0, 1, 1}})},
       LinearStage{mat({{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}})},
       UnaryStage{{UnaryOp::scale(0, kQuarter), UnaryOp::scale(1, kQuarter),
                   UnaryOp::copy(2)}},
       BinaryStage{{BinaryOp::div(0, 2), BinaryOp::div(1, 2)}}});
}

// --- scalar identities ----------------------------------------------

// ab = (1/2)[(a+b)^2 - a^2 - b^2].
Scheme scalar_logan() {
  return make(
      "scalar_logan", {"a", "b"}, {"p"},
      {LinearStage{mat({{1, 0}, {0, 1}, {1, 1}})},
       UnaryStage{{UnaryOp::square(0), UnaryOp::square(1), UnaryOp::square(2)}},
       LinearStage{mat({{-1, -1, 1}})},
       UnaryStage{{UnaryOp::scale(0, kHalf)}}});
}

// ab = (1/4)[(a+b)^2 - (a-b)^2].
Scheme scalar_quarter_square() {
  return make("scalar_quarter_square", {"a", "b"}, {"p"},
              {LinearStage{mat({{1, 1}, {1, -1}})},
               UnaryStage{{UnaryOp::square(0), UnaryOp::square(1)}},
               LinearStage{mat({{1, -1}})},
               UnaryStage{{UnaryOp::scale(0, kQuarter)}}});
}

struct Catalog {
  std::vector<std::string> names;
  std::map<std::string, BuiltinEntry> entries;

  void add(Scheme scheme, std::string description, ReferenceKind ref,
           bool expect_pass, std::string residual_note = {},
           std::optional<std::array<int, 4>> published = std::nullopt) {
    std::string name = scheme.name;
    names.push_back(name);
    entries.emplace(std::move(name),
                    BuiltinEntry{std::move(scheme), std::move(description), ref,
                                 expect_pass, std::move(residual_note),
                                 published});
  }
};

const Catalog& catalog() {
  static const Catalog c = [] {
    Catalog cat;
    using RK = ReferenceKind;
    cat.add(square_direct(), "complex square: two squarers and one multiplier",
            RK::ComplexSquare, true, {}, {{1, 2, 1, 0}});
    cat.add(square_eq6_as_printed(),
            "three-squarer complex square, stage matrices as printed "
            "(known erratum)",
            RK::ComplexSquare, false, "real residual 2*b1^2", {{3, 3, 0, 0}});
    cat.add(square_logan_corrected(),
            "three-squarer complex square, corrected recombination",
            RK::ComplexSquare, true);
    cat.add(mul_direct(), "complex product: four multipliers",
            RK::ComplexMul, true, {}, {{2, 0, 4, 0}});
    cat.add(mul_gauss(), "complex product: three multipliers, five adders",
            RK::ComplexMul, true);
    cat.add(mul_eq7(), "six-squarer complex product", RK::ComplexMul, true, {},
            {{14, 6, 0, 0}});
    cat.add(div_direct(), "complex quotient via the conjugate: four "
            "multipliers, two squarers, two dividers",
            RK::ComplexDiv, true, {}, {{3, 2, 4, 2}});
    cat.add(div_eq8_as_printed(),
            "eight-squarer complex quotient, stage matrices as printed "
            "(known erratum)",
            RK::ComplexDiv, false,
            "imaginary numerator residual -2*(a1^2 + b2^2) over "
            "2*(a2^2 + b2^2)",
            {{11, 8, 0, 2}});
    cat.add(div_logan_corrected(),
            "eight-squarer complex quotient, corrected combinations",
            RK::ComplexDiv, true);
    cat.add(div_via_conjugate_mul(),
            "complex quotient as conjugate product plus two dividers",
            RK::ComplexDiv, true);
    cat.add(scalar_logan(), "real product from three squares",
            RK::ScalarProduct, true);
    cat.add(scalar_quarter_square(), "real product from two squares",
            RK::ScalarProduct, true);
    return cat;
  }();
  return c;
}

} // namespace

const std::vector<std::string>& list_builtins() { return catalog().names; }

const BuiltinEntry& builtin(const std::string& name) {
  const auto& entries = catalog().entries;
  auto it = entries.find(name);
  if (it == entries.end())
    throw UnknownSchemeError("unknown scheme \"" + name + "\"");
  return it->second;
}

bool is_builtin(const std::string& name) {
  return catalog().entries.count(name) != 0;
}

} // namespace sqcx
