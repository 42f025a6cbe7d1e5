#ifndef LATSPEC_TESTS_HELPERS_HPP
#define LATSPEC_TESTS_HELPERS_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "latspec.hpp"

namespace testing_support {

inline latspec::Elem at(const latspec::FiniteLattice& L, const std::string& name) {
  const auto e = L.find(name);
  if (!e) throw std::out_of_range("no element " + name + " in " + L.name());
  return *e;
}

inline latspec::ElemSet set_of(const latspec::FiniteLattice& L, std::initializer_list<const char*> names) {
  latspec::ElemSet s;
  for (const char* n : names) s.insert(at(L, n));
  return s;
}

inline latspec::ComaximalPair pair_of(const latspec::FiniteLattice& L, std::initializer_list<const char*> ideal,
                                      std::initializer_list<const char*> filter) {
  return {set_of(L, ideal), set_of(L, filter)};
}

template <class Fn>
latspec::ErrorKind error_kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const latspec::Error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a latspec::Error");
}

}  // namespace testing_support

#endif  // LATSPEC_TESTS_HELPERS_HPP
