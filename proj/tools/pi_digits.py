#!/usr/bin/env python3
# Copyright 2026 The mathprint Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the leading digits of pi in a small base, 50 per line.

The integer part is the first digit. Used to regenerate data/pi_base6.txt:

    python3 tools/pi_digits.py --base 6 --count 1000 > data/pi_base6.txt
"""

import argparse
import math

import mpmath


def digits(base: int, count: int) -> list[int]:
    mpmath.mp.dps = int(count * math.log10(base)) + 30
    x = +mpmath.pi
    out = []
    for _ in range(count):
        d = int(mpmath.floor(x))
        out.append(d)
        x = (x - d) * base
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--base", type=int, default=6)
    ap.add_argument("--count", type=int, default=1000)
    args = ap.parse_args()
    s = "".join(str(d) for d in digits(args.base, args.count))
    for i in range(0, len(s), 50):
        print(s[i:i + 50])


if __name__ == "__main__":
    main()
