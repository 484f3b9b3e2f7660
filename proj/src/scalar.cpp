#include "weilrep/scalar.hpp"

#include "weilrep/errors.hpp"

namespace weilrep {

std::string to_string(Backend backend) {
  return backend == Backend::Exact ? "exact" : "float";
}

Backend backend_from_string(const std::string& name) {
  if (name == "exact") return Backend::Exact;
  if (name == "float") return Backend::Float;
  throw InvalidParams("unknown backend '" + name + "'");
}

}  // namespace weilrep
