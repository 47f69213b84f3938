#pragma once
// Printed modular equations u = X(q), v = X(q^beta) and the shapes they are
// mined at.

#include "rq/modeq.hpp"

#include <string>
#include <vector>

namespace known {

struct Relation {
  std::string label;  // equation number in the source numbering
  rq::RQSpec spec;
  long beta;
  rq::Shape shape;
  std::string printed;
};

inline std::vector<Relation> self_relations() {
  using rq::RQSpec;
  using rq::Shape;
  const auto r124 = RQSpec::make(1, 2, 4);
  const auto cubic = RQSpec::make(1, 3, 6);
  const auto s12 = RQSpec::make(11, 7, 12);
  const auto s13 = RQSpec::make(14, 10, 16);
  return {
      {"66", r124, 2, Shape::box(4), "u^4-v^2+4*u^4*v^4"},
      {"67", r124, 3, Shape::box(4), "u^4-u*v+4*u^3*v^3-v^4"},
      {"68", r124, 5, Shape::box(6), "u^6-u*v+5*u^4*v^2-5*u^2*v^4+16*u^5*v^5-v^6"},
      {"69", r124, 7, Shape::box(8),
       "u^8-u*v+7*u^2*v^2-28*u^3*v^3+70*u^4*v^4-112*u^5*v^5+112*u^6*v^6-64*u^7*v^7+v^8"},
      {"70", RQSpec::make(1, 2, 6), 2, Shape::box(4), "u^4-v^2+3*u^4*v^2+v^4"},
      {"71", cubic, 5, Shape::box(6),
       "u^6-u*v+5*u^4*v+5*u^2*v^2-10*u^5*v^2-20*u^3*v^3+5*u*v^4+20*u^4*v^4-10*u^2*v^5-16*u^5*v^5+v^6"},
      {"72", cubic, 7, Shape::box(8),
       "u^8-u*v+7*u^4*v+28*u^6*v^2-56*u^5*v^3+7*u*v^4+21*u^4*v^4-56*u^7*v^4-56*u^3*v^5+28*u^2*v^6"
       "-56*u^4*v^7-64*u^7*v^7+v^8"},
      {"82", s12, 2, Shape::box(2), "-u^2+v-2*u*v+u^2*v-v^2"},
      {"83", s12, 3, Shape::box(3), "u^3-v+3*u*v-u^3*v+v^2-3*u^2*v^2+u^3*v^2-v^3"},
      {"84", s12, 5, Shape::box(6),
       "-u^5+v-5*u*v+5*u^2*v+5*u^5*v-10*u^3*v^2-5*u^5*v^2+10*u^2*v^3+10*u^4*v^3-5*u*v^4"
       "-10*u^3*v^4+5*u*v^5+5*u^4*v^5-5*u^5*v^5+u^6*v^5-u*v^6"},
      {"85", s12, 7, Shape::box(8),
       "-u^7+v-7*u*v+14*u^2*v-7*u^3*v+7*u^5*v-7*u^6*v+7*u^7*v+7*u*v^2-28*u^2*v^2"
       "+7*u^3*v^2-28*u^5*v^2+28*u^6*v^2-14*u^7*v^2-7*u*v^3+28*u^2*v^3-7*u^3*v^3"
       "+35*u^4*v^3+7*u^5*v^3-7*u^6*v^3+7*u^7*v^3-35*u^3*v^4-35*u^5*v^4+7*u*v^5"
       "-7*u^2*v^5+7*u^3*v^5+35*u^4*v^5-7*u^5*v^5+28*u^6*v^5-7*u^7*v^5-14*u*v^6"
       "+28*u^2*v^6-28*u^3*v^6+7*u^5*v^6-28*u^6*v^6+7*u^7*v^6+7*u*v^7-7*u^2*v^7"
       "+7*u^3*v^7-7*u^5*v^7+14*u^6*v^7-7*u^7*v^7+u^8*v^7-u*v^8"},
      {"87", s13, 2, Shape::box(2), "u^2-v+u^2*v+v^2"},
      {"88", s13, 3, Shape::box(4), "u^3-v+3*u^2*v+3*u*v^2-3*u^3*v^2-3*u^2*v^3+u^4*v^3-u*v^4"},
      {"89", s13, 5, Shape::box(6),
       "u^5-v+5*u^2*v+10*u^3*v^2-5*u^5*v^2-10*u^2*v^3+10*u^4*v^3+5*u*v^4-10*u^3*v^4"
       "-5*u^4*v^5+u^6*v^5-u*v^6"},
      {"90", s13, 7, Shape::box(8),
       "u^8-u*v+7*u^3*v-7*u^5*v-7*u^7*v+28*u^6*v^2+7*u*v^3-49*u^3*v^3-7*u^5*v^3"
       "-7*u^7*v^3+70*u^4*v^4-7*u*v^5-7*u^3*v^5-49*u^5*v^5+7*u^7*v^5+28*u^2*v^6"
       "-7*u*v^7-7*u^3*v^7+7*u^5*v^7-u^7*v^7+v^8"},
  };
}

// The R(1,3,10) / R(1,2,5) cross relation.
inline const char* kCrossRr = "u^3-u*v+u^2*v^3+v^4";

}  // namespace known
