#pragma once

#include <stdexcept>
#include <string>

namespace dcomp {

// Every failure raised by the library derives from Error so callers can catch
// the whole family at once.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph(long long rep_a, long long rep_b)
      : Error("graph is disconnected: vertex " + std::to_string(rep_a) +
              " cannot reach vertex " + std::to_string(rep_b)),
        rep_a_(rep_a),
        rep_b_(rep_b) {}
  long long first_representative() const { return rep_a_; }
  long long second_representative() const { return rep_b_; }

 private:
  long long rep_a_;
  long long rep_b_;
};

#define DCOMP_DEFINE_ERROR(Name) \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  }

DCOMP_DEFINE_ERROR(InvalidMetric);
DCOMP_DEFINE_ERROR(InvalidGraph);
DCOMP_DEFINE_ERROR(InvalidArgument);
DCOMP_DEFINE_ERROR(SizeMismatch);
DCOMP_DEFINE_ERROR(UnknownPoint);
DCOMP_DEFINE_ERROR(LevelOutOfRange);
DCOMP_DEFINE_ERROR(LevelUnderflow);
DCOMP_DEFINE_ERROR(InvalidPoint);
DCOMP_DEFINE_ERROR(EmptyLongEdgeSet);
DCOMP_DEFINE_ERROR(TooFewLeaves);
DCOMP_DEFINE_ERROR(VertexSetMismatch);
DCOMP_DEFINE_ERROR(ParseError);
DCOMP_DEFINE_ERROR(ConfigError);

#undef DCOMP_DEFINE_ERROR

}  // namespace dcomp
