#ifndef LKV_STATUS_H_
#define LKV_STATUS_H_

#include <string>
#include <utility>

namespace lkv {

// Operation result. Ok by default; error states carry a code and a message.
class Status {
 public:
  Status() : code_(kOk) {}

  static Status OK() { return Status(); }
  static Status NotFound(std::string msg = "") {
    return Status(kNotFound, std::move(msg));
  }
  static Status InvalidArgument(std::string msg) {
    return Status(kInvalidArgument, std::move(msg));
  }
  static Status Corruption(std::string msg) {
    return Status(kCorruption, std::move(msg));
  }
  static Status IOError(std::string msg) {
    return Status(kIOError, std::move(msg));
  }
  static Status Unsupported(std::string msg) {
    return Status(kUnsupported, std::move(msg));
  }
  static Status OutOfRange(std::string msg = "") {
    return Status(kOutOfRange, std::move(msg));
  }

  bool ok() const { return code_ == kOk; }
  bool IsNotFound() const { return code_ == kNotFound; }
  bool IsInvalidArgument() const { return code_ == kInvalidArgument; }
  bool IsCorruption() const { return code_ == kCorruption; }
  bool IsIOError() const { return code_ == kIOError; }
  bool IsUnsupported() const { return code_ == kUnsupported; }
  bool IsOutOfRange() const { return code_ == kOutOfRange; }

  std::string ToString() const {
    if (ok()) return "OK";
    const char* name;
    switch (code_) {
      case kNotFound: name = "NotFound"; break;
      case kInvalidArgument: name = "InvalidArgument"; break;
      case kCorruption: name = "Corruption"; break;
      case kIOError: name = "IOError"; break;
      case kUnsupported: name = "Unsupported"; break;
      case kOutOfRange: name = "OutOfRange"; break;
      default: name = "Unknown"; break;
    }
    return msg_.empty() ? std::string(name) : std::string(name) + ": " + msg_;
  }

 private:
  enum Code {
    kOk = 0,
    kNotFound,
    kInvalidArgument,
    kCorruption,
    kIOError,
    kUnsupported,
    kOutOfRange,
  };

  Status(Code code, std::string msg) : code_(code), msg_(std::move(msg)) {}

  Code code_;
  std::string msg_;
};

}  // namespace lkv

#endif  // LKV_STATUS_H_
