// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace typobench {

// Base class for all error conditions raised by the library. Each concrete
// subclass corresponds to one failure mode callers may want to handle
// separately; the message carries context for logs and CLI output.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The font file is missing, truncated, or lacks a table we depend on.
class UnresolvableFont : public Error {
 public:
  using Error::Error;
};

// Overlay text must be non-empty.
class EmptyText : public Error {
 public:
  using Error::Error;
};

// The rasterized overlay does not fit inside the base image at all.
class GlyphLargerThanImage : public Error {
 public:
  using Error::Error;
};

// The requested overlay placement would write outside the base image.
class AnchorOutOfBounds : public Error {
 public:
  using Error::Error;
};

// No overlay word can be drawn for an item after exclusions.
class EmptyTypoPool : public Error {
 public:
  using Error::Error;
};

// A manifest build was requested over a corpus with no items.
class EmptyBaseSet : public Error {
 public:
  using Error::Error;
};

// Prompt template id is not in the registry.
class UnknownTemplate : public Error {
 public:
  using Error::Error;
};

// A prompt cannot be rendered without answer choices.
class NoChoices : public Error {
 public:
  using Error::Error;
};

// Option-set rendering refuses a label that equals the overlay word, since
// the resulting strings would be indistinguishable.
class LabelTypoCollision : public Error {
 public:
  using Error::Error;
};

// The model endpoint did not accept a connection at startup.
class EndpointUnreachable : public Error {
 public:
  using Error::Error;
};

// Records passed to a factor table do not all belong to the requested axis.
class AxisMismatch : public Error {
 public:
  using Error::Error;
};

// A color name outside the palette.
class UnknownColor : public Error {
 public:
  using Error::Error;
};

// Malformed corpus input.
class CorpusError : public Error {
 public:
  using Error::Error;
};

// Malformed manifest input or a count table that does not add up.
class ManifestError : public Error {
 public:
  using Error::Error;
};

// File system or encoding failure outside the categories above.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace typobench
