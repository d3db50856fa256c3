// Copyright 2026 The mathprint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mathprint {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Face indices out of range, or non-finite coordinates where finite ones
/// are required.
class MalformedMeshError : public Error {
 public:
  using Error::Error;
};

class InvalidTransformError : public Error {
 public:
  using Error::Error;
};

/// Raised by topology measures on meshes that are not closed 2-manifolds.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// A generator could not produce a mesh (bad parameters, non-finite samples,
/// vanishing normals).
class GenerationError : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Bad user input: malformed digit lists, non-binary voxel entries,
/// out-of-range scene parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Encoding or decoding failure in one of the mesh/image file formats.
class CodecError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace mathprint
