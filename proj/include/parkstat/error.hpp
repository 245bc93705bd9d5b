#ifndef PARKSTAT_ERROR_HPP
#define PARKSTAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace parkstat {

enum class ErrorKind {
  ParseError,
  InvalidWord,
  InvalidTree,
  InvalidPermutation,
  InvalidPartition,
  InvalidComposition,
  NotParking,
  CodeOutOfRange,
  SideConditionViolated,
  ParamOutOfRange,
  ResourceCap,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InvalidComposition: return "InvalidComposition";
    case ErrorKind::NotParking: return "NotParking";
    case ErrorKind::CodeOutOfRange: return "CodeOutOfRange";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::ResourceCap: return "ResourceCap";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace parkstat

#endif  // PARKSTAT_ERROR_HPP
