#include "tessera/identities.hpp"

namespace tessera {

const std::vector<NamedIdentity>& tesseranity_identities() {
  static const std::vector<NamedIdentity> kIdentities{
      {"identity 1", "bar(x)*(x*y) = y*(x*bar(x))"},
      {"identity 2", "(y*x)*bar(x) = (x*bar(x))*y"},
      {"identity 3", "[x*(x*y) - x^2*y] - [y*x^2 - (y*x)*x]"},
      {"identity 4", "[x*(x*x^2) - x^2*x^2] - [x^2*x^2 - (x^2*x)*x]"},
      {"identity 5", "[x*(x^2*x) - (x*x^2)*x] - [x^2*x^2 - (x^2*x)*x]"},
      {"identity 6", "(x*bar(x))*bar(x*bar(x)) = bar(x*(x*bar(x)))*x = bar(bar(x)*x^2)*x"},
      {"identity 7", "(x*bar(x))*bar(x*bar(x)) = x*bar((x*bar(x))*x) = x*bar(x^2*bar(x))"},
      {"identity 8", "[x^2*y^2 - (x^2*y)*y] - [y*(y*x^2) - y^2*x^2]"},
      {"identity 9", "[(x*y)^2 - ((x*y)*x)*y] - [y*(x*(x*y)) - (y*x)*(x*y)]"},
      {"identity 10", "[x*(y*(x*y)) - (x*y)^2] - [(x*y)*(y*x) - ((x*y)*y)*x]"},
      {"identity 11", "y*([x*(x*y) - x^2*y] - [y*x^2 - (y*x)*x])"},
      {"identity 12",
       "x*[x*y^2 - (x*y)*y] + y*[x^2*y - x*(x*y)] + [x*((x*y)*y) - (x*(x*y))*y] - [y*(y*x^2) - y^2*x^2]"},
      {"identity 13",
       "x*[x*y^2 - (x*y)*y] + y*[x^2*y - x*(x*y)] + [x*(x*y^2) - x^2*y^2] - [x*((y*x)*y) - (x*(y*x))*y]"},
      {"identity 14",
       "[x*(x*y^2) - x^2*y^2] - [y*(x*(y*x)) - (y*x)^2] + [y*(x^2*y) - (y*x^2)*y] - [y*(x*(x*y)) - (y*x)*(x*y)]"},
      {"identity 15", "x*[(x*y)*y - x*y^2] + [(x*y)*y - x*y^2]*x + [y*(y*x^2) - y^2*x^2]"},
      {"identity 16", "[y*((x*y)*x) - (y*(x*y))*x] - [x*((x*y)*y) - (x*(x*y))*y]"},
      {"identity 17",
       "x*[x*y^2 - (x*y)*y] + y*[(y*x)*x - y*x^2] + [x*(x*y^2) - x^2*y^2] - [y*((y*x)*x) - (y*(y*x))*x]"},
  };
  return kIdentities;
}

const std::vector<NamedIdentity>& conjugate_identities() {
  static const std::vector<NamedIdentity> kIdentities{
      tesseranity_identities()[0],
      tesseranity_identities()[1],
      tesseranity_identities()[5],
      tesseranity_identities()[6],
  };
  return kIdentities;
}

namespace {

CoefficientFamily quartic_two_two() {
  return {"family (2,2)",
          DegreePattern{{2, 2}},
          {{"a1", "(x*x)*(y*y)"},   {"a2", "(x*y)*(x*y)"},   {"a3", "(y*x)*(x*y)"},   {"a4", "(x*y)*(y*x)"},
           {"a5", "(y*x)*(y*x)"},   {"a6", "(y*y)*(x*x)"},   {"b1", "x*(x*(y*y))"},   {"b2", "x*(y*(x*y))"},
           {"b3", "y*(x*(x*y))"},   {"b4", "x*(y*(y*x))"},   {"b5", "y*(x*(y*x))"},   {"b6", "y*(y*(x*x))"},
           {"c1", "((x*x)*y)*y"},   {"c2", "((x*y)*x)*y"},   {"c3", "((y*x)*x)*y"},   {"c4", "((x*y)*y)*x"},
           {"c5", "((y*x)*y)*x"},   {"c6", "((y*y)*x)*x"},   {"e1", "x*((x*y)*y)"},   {"e2", "x*((y*x)*y)"},
           {"e3", "y*((x*x)*y)"},   {"e4", "x*((y*y)*x)"},   {"e5", "y*((x*y)*x)"},   {"e6", "y*((y*x)*x)"},
           {"f1", "(x*(x*y))*y"},   {"f2", "(x*(y*x))*y"},   {"f3", "(y*(x*x))*y"},   {"f4", "(x*(y*y))*x"},
           {"f5", "(y*(x*y))*x"},   {"f6", "(y*(y*x))*x"}},
          {"a1 = -f6-c1-c6-f2+f3", "a2 = -c4-f4-c2", "a3 = -f3-c2-c3", "a4 = -c5-f4-c4", "a5 = -f3-c3-c5",
           "a6 = -c1-f1-f5+f4-c6", "b1 = 2f6+c6+2f2+e4+f4-f1-f5-f3", "b2 = c4+f4", "b3 = c2+f1+f5+f3-f2+e6",
           "b4 = -e4+c5", "b5 = f3+c3", "b6 = -f4-f6-e6+f1+f5+c1", "e1 = -f6+f5-f2-e4-f4", "e2 = -f2",
           "e3 = -f1-f5-f3+f2-e6", "e5 = -f5"}};
}

// The f-monomials are the four bracketings of the pattern not covered by the
// a, b, c and e groups, named in analogy with the (2,2) family.
CoefficientFamily quartic_three_one() {
  return {"family (3,1)",
          DegreePattern{{3, 1}},
          {{"a1", "x^2*(x*y)"},     {"a2", "x^2*(y*x)"},     {"a3", "(x*y)*x^2"},     {"a4", "(y*x)*x^2"},
           {"b1", "x*(x*(x*y))"},   {"b2", "x*(x*(y*x))"},   {"b3", "x*(y*x^2)"},     {"b4", "y*(x*x^2)"},
           {"c1", "(x^2*x)*y"},     {"c2", "(x^2*y)*x"},     {"c3", "((x*y)*x)*x"},   {"c4", "((y*x)*x)*x"},
           {"e1", "x*(x^2*y)"},     {"e2", "x*((x*y)*x)"},   {"e3", "x*((y*x)*x)"},   {"e4", "y*(x^2*x)"},
           {"f1", "(x*x^2)*y"},     {"f2", "(x*(x*y))*x"},   {"f3", "(x*(y*x))*x"},   {"f4", "(y*x^2)*x"}},
          {"a1 = -c3-c1-f3", "a2 = -c4-f3-c2", "a3 = -c3-f2-c2", "a4 = -f1-f4+f3-c1-c4", "b1 = c3+e3+2f3",
           "b2 = c4+2f3-f2", "b3 = f2-f3+c2-e3", "b4 = f1+f4-2f3+c1+f2", "e1 = -f1-e3-f3", "e2 = -f3",
           "e4 = -f2-f4+f3"}};
}

CoefficientFamily quintic() {
  return {"family (5)",
          DegreePattern{{5}},
          {{"a1", "x*(x^2*x^2)"},
           {"b1", "x*(x*(x*x^2))"},
           {"c1", "x*((x^2*x)*x)"},
           {"e1", "x*(x*(x^2*x))"},
           {"f1", "x*((x*x^2)*x)"},
           {"a2", "(x^2*x^2)*x"},
           {"b2", "(x*(x*x^2))*x"},
           {"c2", "((x^2*x)*x)*x"},
           {"e2", "(x*(x^2*x))*x"},
           {"f2", "((x*x^2)*x)*x"},
           {"a3", "x^2*(x^2*x)"},
           {"b3", "x^2*(x*x^2)"},
           {"c3", "(x^2*x)*x^2"},
           {"e3", "(x*x^2)*x^2"}},
          {"a1 = -2c1-2f1-b2+c2-2e2-e1-f2-e3", "a2 = -2c2+f1+e1-f2-e3-c3", "a3 = -f1-b2+c2-e1+f2+e3+c3",
           "b1 = c1+2f1+b2-c2+2e2+e1+f2", "b3 = -e1-e2-f1-f2-c3"}};
}

CoefficientFamily sextic() {
  return {"family (6)",
          DegreePattern{{6}},
          {{"a01", "x*(x*(x*(x*x^2)))"},   {"a02", "x*(x*(x*(x^2*x)))"},   {"a03", "x*(x*(x^2*x^2))"},
           {"a04", "x*(x*((x*x^2)*x))"},   {"a05", "x*(x*((x^2*x)*x))"},   {"a06", "x*(x^2*(x*x^2))"},
           {"a07", "x*(x^2*(x^2*x))"},     {"a08", "x*((x*x^2)*x^2)"},     {"a09", "x*((x*(x*x^2))*x)"},
           {"a10", "x*((x*(x^2*x))*x)"},   {"a11", "x*((x^2*x)*x^2)"},     {"a12", "x*((x^2*x^2)*x)"},
           {"a13", "x*(((x*x^2)*x)*x)"},   {"a14", "x*(((x^2*x)*x)*x)"},   {"a15", "x^2*(x*(x*x^2))"},
           {"a16", "x^2*(x*(x^2*x))"},     {"a17", "x^2*(x^2*x^2)"},       {"a18", "x^2*((x*x^2)*x)"},
           {"a19", "x^2*((x^2*x)*x)"},     {"a20", "(x*x^2)*(x*x^2)"},     {"a21", "(x*x^2)*(x^2*x)"},
           {"a22", "(x*(x*x^2))*x^2"},     {"a23", "(x*(x*(x*x^2)))*x"},   {"a24", "(x*(x*(x^2*x)))*x"},
           {"a25", "(x*(x^2*x))*x^2"},     {"a26", "(x*(x^2*x^2))*x"},     {"a27", "(x*((x*x^2)*x))*x"},
           {"a28", "(x*((x^2*x)*x))*x"},   {"a29", "(x^2*x)*(x*x^2)"},     {"a30", "(x^2*x)*(x^2*x)"},
           {"a31", "(x^2*x^2)*x^2"},       {"a32", "(x^2*(x*x^2))*x"},     {"a33", "(x^2*(x^2*x))*x"},
           {"a34", "((x*x^2)*x)*x^2"},     {"a35", "((x*x^2)*x^2)*x"},     {"a36", "((x*(x*x^2))*x)*x"},
           {"a37", "((x*(x^2*x))*x)*x"},   {"a38", "((x^2*x)*x)*x^2"},     {"a39", "((x^2*x)*x^2)*x"},
           {"a40", "((x^2*x^2)*x)*x"},     {"a41", "(((x*x^2)*x)*x)*x"},   {"a42", "(((x^2*x)*x)*x)*x"}},
          {"a01 = 2a36+a31+a33+a29+2a34+2a28+a20+a35+a40+a38+2a37+a41+2a25+a24+2a10+a14+a26+a12+a09+2a27"
           "+a04+a05+a11+2a13+a08+a22",
           "a02 = 2a36+2a31+a33+a29+2a34+a30+2a28+a21+a32+a20+2a35+2a40+2a38+3a37+3a41+2a25+a24+2a42+2a39"
           "+2a14+a26+a12+2a27-a04+a11+a13+a08+2a22",
           "a03 = -a36+a30-a28+a21+a32+a35+a40+a38-a37+a41-a25-a24+a23-2a10+3a42+2a39-a14-a12-a09-2a27-a04"
           "-2a05-a11-2a13-2a08-a22",
           "a06 = -2a36-2a31-a33-a29-3a34-a30-2a28-a21-a32-2a20-2a35-2a40-2a38-3a37-3a41-3a25-a24-a10-2a42"
           "-2a39-2a14-a26-a12-2a27-2a11-2a13-a08-2a22",
           "a07 = -a28-a21-a35-a23-a14-a26-a12-a09",
           "a15 = -a41+a24+a19-a25-a28+a23-a31-a40-a35-2a29+a18-a20+a32-2a34-a37-2a38-a36-a42",
           "a16 = -a30-a32-a37-a41-a24-a18-a39-a27",
           "a17 = -a36-a31-2a33-a30-a21-2a32-a35-2a40-a38-a41-a24-2a23-a18-3a42-2a39-a26-2a19-a22"}};
}

}  // namespace

const std::vector<CoefficientFamily>& coefficient_families() {
  static const std::vector<CoefficientFamily> kFamilies{quartic_two_two(), quartic_three_one(), quintic(), sextic()};
  return kFamilies;
}

}  // namespace tessera
