#pragma once

#include <stdexcept>
#include <string>

namespace mroc {

// Input errors map to exit status 2 in the CLI, everything else to 1.
enum class ErrorKind { input, runtime };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

#define MROC_DEFINE_ERROR(Name, Kind)                                 \
  class Name : public Error {                                         \
   public:                                                            \
    Name(std::string module, const std::string& what)                 \
        : Error(ErrorKind::Kind, std::move(module), what) {}          \
  };

MROC_DEFINE_ERROR(SchemaError, input)
MROC_DEFINE_ERROR(ParseError, input)
MROC_DEFINE_ERROR(VocabularyError, input)
MROC_DEFINE_ERROR(ValidationError, input)
MROC_DEFINE_ERROR(ConfigError, input)
MROC_DEFINE_ERROR(ComparabilityError, input)
MROC_DEFINE_ERROR(ShapeError, runtime)
MROC_DEFINE_ERROR(DomainError, runtime)
MROC_DEFINE_ERROR(InsufficientDataError, runtime)
MROC_DEFINE_ERROR(NumericalError, runtime)
MROC_DEFINE_ERROR(DegenerateError, runtime)
MROC_DEFINE_ERROR(NoSignalError, runtime)
MROC_DEFINE_ERROR(IoError, runtime)

#undef MROC_DEFINE_ERROR

// Raised by roc_binary when one side of the split is empty; carries the class
// so batch callers can decide whether to skip it.
class EmptyClassError : public Error {
 public:
  EmptyClassError(int class_index, const std::string& what)
      : Error(ErrorKind::runtime, "roc", what), class_index_(class_index) {}
  int class_index() const noexcept { return class_index_; }

 private:
  int class_index_;
};

}  // namespace mroc
