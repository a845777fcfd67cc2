#pragma once

#include <stdexcept>
#include <string>

namespace terra {

/// CLI exit-code classification: Validation maps to exit 1, Io to exit 2.
enum class ErrorKind { Validation, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define TERRA_DEFINE_ERROR(Name, Kind)                            \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what)                        \
        : Error(ErrorKind::Kind, std::string(#Name ": ") + what) {} \
  }

// Ingest / decode failures.
TERRA_DEFINE_ERROR(MalformedLabel, Io);
TERRA_DEFINE_ERROR(UnsupportedValue, Io);
TERRA_DEFINE_ERROR(TruncatedData, Io);
TERRA_DEFINE_ERROR(UnsupportedSampleType, Io);
TERRA_DEFINE_ERROR(MalformedHeader, Io);
TERRA_DEFINE_ERROR(UnsupportedImageFormat, Io);
TERRA_DEFINE_ERROR(MalformedManifest, Io);
TERRA_DEFINE_ERROR(IoError, Io);
TERRA_DEFINE_ERROR(OutputIoError, Io);

// Domain / validation failures.
TERRA_DEFINE_ERROR(FractionOutOfRange, Validation);
TERRA_DEFINE_ERROR(DegenerateGrid, Validation);
TERRA_DEFINE_ERROR(EmptyMesh, Validation);
TERRA_DEFINE_ERROR(ElevationOutOfRange, Validation);
TERRA_DEFINE_ERROR(PixelOutOfRange, Validation);
TERRA_DEFINE_ERROR(NoTerrainBelow, Validation);
TERRA_DEFINE_ERROR(InvalidConfig, Validation);
TERRA_DEFINE_ERROR(InvalidSpec, Validation);
TERRA_DEFINE_ERROR(BoundsOutsideTerrain, Validation);
TERRA_DEFINE_ERROR(ResampleExhausted, Validation);

#undef TERRA_DEFINE_ERROR

}  // namespace terra
