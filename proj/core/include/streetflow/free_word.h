// Copyright 2025 The streetflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STREETFLOW_FREE_WORD_H_
#define STREETFLOW_FREE_WORD_H_

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <string>
#include <vector>

#include "streetflow/errors.h"

namespace streetflow {

// A freely reduced word over generators 1..n: letter +g is the generator,
// -g its inverse.  Free reduction is the normal form; every mutation keeps
// it, so words compare by plain equality.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<int> letters) {
    for (int l : letters) Append(l);
  }
  static FreeWord FromLetters(const std::vector<int>& letters) {
    FreeWord w;
    for (int l : letters) w.Append(l);
    return w;
  }

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  void Append(int letter) {
    if (letter == 0) throw ValidationError("letter 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -letter) {
      letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
  }

  FreeWord operator*(const FreeWord& o) const {
    FreeWord out = *this;
    for (int l : o.letters_) out.Append(l);
    return out;
  }

  FreeWord Inverse() const {
    FreeWord out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      out.letters_.push_back(-*it);
    }
    return out;
  }

  FreeWord Pow(int e) const {
    FreeWord base = e < 0 ? Inverse() : *this;
    FreeWord out;
    for (int i = 0; i < std::abs(e); ++i) out = out * base;
    return out;
  }

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeWord& o) const { return letters_ != o.letters_; }

  // Letter counts by generator: component g-1 counts +g minus -g.
  std::vector<std::int64_t> Abelianize(int rank) const {
    std::vector<std::int64_t> v(rank, 0);
    for (int l : letters_) {
      const int g = std::abs(l);
      if (g > rank) throw ValidationError("letter outside the alphabet");
      v[g - 1] += l > 0 ? 1 : -1;
    }
    return v;
  }

  std::string Str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (int l : letters_) {
      if (!out.empty()) out += " ";
      out += names.at(std::abs(l) - 1);
      if (l < 0) out += "^-1";
    }
    return out;
  }

 private:
  std::vector<int> letters_;
};

}  // namespace streetflow

#endif  // STREETFLOW_FREE_WORD_H_
