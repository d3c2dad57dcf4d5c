#pragma once

#include <stdexcept>
#include <string>

namespace relink {

class Error : public std::runtime_error {
public:
  enum class Kind {
    Parse,
    Config,
    Division,
    Truncation,
    Typicality,
    Validation,
    Internal,
  };

  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(Error::Kind::Parse, msg); }
inline Error config_error(const std::string& msg) { return Error(Error::Kind::Config, msg); }
inline Error division_error(const std::string& msg) { return Error(Error::Kind::Division, msg); }
inline Error truncation_error(const std::string& msg) { return Error(Error::Kind::Truncation, msg); }
inline Error typicality_error(const std::string& msg) { return Error(Error::Kind::Typicality, msg); }
inline Error validation_error(const std::string& msg) { return Error(Error::Kind::Validation, msg); }
inline Error internal_error(const std::string& msg) { return Error(Error::Kind::Internal, msg); }

}  // namespace relink
