#include "permaut/error.hpp"

namespace permaut {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BadAutomaton: return "BadAutomaton";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::WitnessCheckFailed: return "WitnessCheckFailed";
  }
  return "Unknown";
}

}  // namespace permaut
