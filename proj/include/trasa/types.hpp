#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trasa {

using NodeId = std::uint32_t;
using SlotIndex = std::size_t;

inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

enum class Heuristic { kMostDescendantsFirst = 1, kFewestDescendantsFirst = 2 };

enum class InterferenceVariant { kAllLinks, kTreeOnly };

/// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// The degree bound prevents the attachment rule from spanning the graph.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class InvalidColoringError : public Error {
 public:
  using Error::Error;
};

/// A node was asked to transmit while holding no packet.
class CausalityBreach : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class CannotSample : public Error {
 public:
  using Error::Error;
};

class OutputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

std::string to_string(InterferenceVariant variant);
std::string to_string(Heuristic heuristic);

}  // namespace trasa
