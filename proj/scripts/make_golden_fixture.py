#!/usr/bin/env python3
# Copyright 2026 The Normpipe Authors.
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
"""Regenerates data/golden/fixture.jsonl.

The fixture stands in for a masked language model on the golden sentences.
Most lists are short and hand-ranked. The list for "i m [MASK] her ." is
padded with unrelated words so that "wit" sits far down the ranking, the
way a real model would place it.
"""

import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent

HAND = [
    ("i [MASK] wit her .", ["am", "was", "saw", "went", "stay"]),
    ("[MASK] m wit her .", ["i", "you", "we", "they"]),
    ("i m wit [MASK] .", ["her", "him", "them", "you"]),
    ("my [MASK] is coming 2morrow .",
     ["friend", "brother", "mom", "dad", "sister"]),
    ("my frnd is coming [MASK] .", ["home", "tomorrow", "today", "back"]),
    ("that movie was [MASK] !", ["great", "amazing", "cool", "fun", "bad"]),
    ("good morning jack , we are [MASK] .", ["late", "here", "back", "early"]),
]

WIT_KEY = "i m [MASK] her ."
WIT_HEAD = ["with", "for", "to", "like"]
WIT_RANK = 1999


def filler(count):
  words = []
  for line in (ROOT / "data" / "vocabulary.txt").read_text().splitlines():
    w = line.strip()
    if not w or w.startswith("#") or not w.isalpha() or not 4 <= len(w) <= 8:
      continue
    if set(w) & set("with"):
      continue
    words.append(w)
  step = max(1, len(words) // count)
  return words[::step][:count]


def scored(words, top=12.0, gap=0.25):
  return [[w, round(top - gap * i, 4)] for i, w in enumerate(words)]


def main():
  rows = [{"key": k, "candidates": scored(v)} for k, v in HAND]
  pad = filler(WIT_RANK - len(WIT_HEAD))
  wit_list = WIT_HEAD + pad + ["wit"]
  assert wit_list.index("wit") == WIT_RANK
  assert len(set(wit_list)) == len(wit_list)
  rows.insert(1, {"key": WIT_KEY,
                  "candidates": scored(wit_list, top=20.0, gap=0.005)})
  out = ROOT / "data" / "golden" / "fixture.jsonl"
  with out.open("w") as f:
    for row in rows:
      f.write(json.dumps(row) + "\n")


if __name__ == "__main__":
  main()
