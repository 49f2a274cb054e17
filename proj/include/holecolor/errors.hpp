#pragma once

#include <stdexcept>
#include <string>

#include "holecolor/graph.hpp"

namespace holecolor {

/// A structural guarantee that holds in every odd-hole-free graph was
/// observed to fail. The colorer reacts by searching for an odd hole.
class StructureViolation : public std::runtime_error {
 public:
  StructureViolation(std::string site, const std::string& detail,
                     VertexSet witness = {})
      : std::runtime_error(site + ": " + detail),
        site_(std::move(site)),
        witness_(std::move(witness)) {}

  const std::string& site() const { return site_; }
  const VertexSet& witness() const { return witness_; }

 private:
  std::string site_;
  VertexSet witness_;
};

/// A bug: an invariant failed on an input for which no odd hole exists,
/// or a certificate failed its own verification.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive oracle declined an input above its size limit.
class SizeRefusal : public std::runtime_error {
 public:
  SizeRefusal(const std::string& what, int n, int limit)
      : std::runtime_error(what), n_(n), limit_(limit) {}
  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

}  // namespace holecolor
