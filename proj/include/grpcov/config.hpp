#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace grpcov {

  using Elem = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input or parameters outside a family's range.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // A configured element or subgroup cap was hit; the computation was refused
  // rather than answered partially.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), _cap(cap) {}
    std::size_t cap() const noexcept { return _cap; }

   private:
    std::size_t _cap;
  };

  class NotNormal : public InvalidArgument {
   public:
    NotNormal(Elem conjugator, Elem member)
        : InvalidArgument("subgroup is not normal: conjugating element "
                          + std::to_string(member) + " by "
                          + std::to_string(conjugator) + " leaves it"),
          _g(conjugator),
          _n(member) {}
    Elem conjugator() const noexcept { return _g; }
    Elem member() const noexcept { return _n; }

   private:
    Elem _g;
    Elem _n;
  };

  struct Limits {
    std::size_t max_elements   = 20'000;
    std::size_t max_subgroups  = 512;
    std::size_t oracle_subgroups = 40;
  };

  namespace detail {
    inline Limits& limits_storage() {
      static Limits l = [] {
        Limits out;
        if (char const* env = std::getenv("GRPCOV_MAX_ELEMENTS")) {
          char*              end = nullptr;
          unsigned long long v   = std::strtoull(env, &end, 10);
          if (end != env && *end == '\0' && v > 0) {
            out.max_elements = static_cast<std::size_t>(v);
          }
        }
        return out;
      }();
      return l;
    }
  }  // namespace detail

  // Process-wide caps. GRPCOV_MAX_ELEMENTS overrides the element cap.
  inline Limits const& limits() { return detail::limits_storage(); }

  // Temporarily replaces the process-wide caps; not thread-safe, meant for
  // drivers and tests that set caps before spawning work.
  class ScopedLimits {
   public:
    explicit ScopedLimits(Limits l) : _saved(detail::limits_storage()) {
      detail::limits_storage() = l;
    }
    ScopedLimits(ScopedLimits const&)            = delete;
    ScopedLimits& operator=(ScopedLimits const&) = delete;
    ~ScopedLimits() { detail::limits_storage() = _saved; }

   private:
    Limits _saved;
  };

}  // namespace grpcov
