#ifndef LATSPEC_ERROR_HPP
#define LATSPEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace latspec {

enum class ErrorKind {
  NotALattice,
  CyclicCovers,
  DuplicateElement,
  EmptyGeneratorSet,
  NotAHom,
  NotACover,
  NotIncreasing,
  NotDisjoint,
  EmptyInput,
  CarrierTooLarge,
  NotPairwiseBD,
  NotBDSpace,
  NotDoublyBD,
  NotQuasiProper,
  ParseError,
  UnknownElement,
  MissingMapping,
  SizeBoundExceeded,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::NotPairwiseBD: return "NotPairwiseBD";
    case ErrorKind::NotBDSpace: return "NotBDSpace";
    case ErrorKind::NotDoublyBD: return "NotDoublyBD";
    case ErrorKind::NotQuasiProper: return "NotQuasiProper";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::MissingMapping: return "MissingMapping";
    case ErrorKind::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every library failure is reported through this exception; `kind()` is stable,
/// the message carries the witness in element/set names where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latspec

#endif  // LATSPEC_ERROR_HPP
