#pragma once

#include <stdexcept>
#include <string>

namespace iswb {

enum class Err {
  DuplicateElem,
  UnknownElem,
  CycleDetected,
  NotBelowZ,
  NoLocalLub,
  SizeLimitExceeded,
  MalformedSystem,
  NotConsistent,
  InvalidSystem,
  MalformedFrame,
  InvalidFrame,
  NotAState,
  NotBounded,
  NotLDomain,
  IsoCheckFailed,
  MalformedMap,
  SystemMismatch,
  NotMonotone,
  InvalidMap,
  BcViolated,
  AlgPlusViolated,
  FreshTokenClash,
  ParseError,
  KindMismatch,
  InternalCheckFailed,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DuplicateElem: return "DuplicateElem";
    case Err::UnknownElem: return "UnknownElem";
    case Err::CycleDetected: return "CycleDetected";
    case Err::NotBelowZ: return "NotBelowZ";
    case Err::NoLocalLub: return "NoLocalLub";
    case Err::SizeLimitExceeded: return "SizeLimitExceeded";
    case Err::MalformedSystem: return "MalformedSystem";
    case Err::NotConsistent: return "NotConsistent";
    case Err::InvalidSystem: return "InvalidSystem";
    case Err::MalformedFrame: return "MalformedFrame";
    case Err::InvalidFrame: return "InvalidFrame";
    case Err::NotAState: return "NotAState";
    case Err::NotBounded: return "NotBounded";
    case Err::NotLDomain: return "NotLDomain";
    case Err::IsoCheckFailed: return "IsoCheckFailed";
    case Err::MalformedMap: return "MalformedMap";
    case Err::SystemMismatch: return "SystemMismatch";
    case Err::NotMonotone: return "NotMonotone";
    case Err::InvalidMap: return "InvalidMap";
    case Err::BcViolated: return "BcViolated";
    case Err::AlgPlusViolated: return "AlgPlusViolated";
    case Err::FreshTokenClash: return "FreshTokenClash";
    case Err::ParseError: return "ParseError";
    case Err::KindMismatch: return "KindMismatch";
    case Err::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

struct IswbError : std::runtime_error {
  Err code;
  IswbError(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw IswbError(c, msg); }

}  // namespace iswb
