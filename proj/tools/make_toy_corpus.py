#!/usr/bin/env python3
"""Generate the bundled toy comment corpus, seed words and held-out labels.

The output is deterministic for a given --seed. Comments are pre-tokenized
English with a few dirty metadata cells, so the whole pipeline runs without
a Chinese segmenter.

    python3 tools/make_toy_corpus.py --out data
"""

import argparse
import csv
import random
from pathlib import Path

POSITIVE = [
    "awesome", "love", "great", "beautiful", "amazing", "happy", "wonderful",
    "excellent", "perfect", "fantastic", "lovely", "brilliant", "cute", "sweet",
    "nice", "fun", "funny", "glad", "joy", "adorable", "charming", "superb",
    "delightful", "cheerful", "blessed",
]
NEGATIVE = [
    "awful", "hate", "terrible", "ugly", "boring", "sad", "horrible", "bad",
    "worst", "disgusting", "annoying", "stupid", "angry", "cry", "painful",
    "poor", "gross", "lame", "miserable", "nasty", "pathetic", "dreadful",
    "tragic", "gloomy", "upset",
]
POS_CONTEXT = ["smile", "laugh", "cheers", "hug", "yay", "thanks", "bravo", "wow"]
NEG_CONTEXT = ["sigh", "ugh", "tears", "sorry", "alas", "shame", "yuck", "boo"]
NEUTRAL = [
    "video", "music", "dance", "cake", "firework", "dog", "cat", "song", "city",
    "street", "food", "phone", "camera", "friend", "today", "tonight", "again",
    "really", "very", "so", "this", "that", "the", "is", "was", "it", "a",
    "one", "my", "your", "here", "there",
]
# High-frequency words with the relative weights of the top comment words.
FREQUENT = {"feel": 3710, "Awesome": 3523, "heart": 3365, "praise": 2351}

NAMES = ["momo", "xiaoyu", "lin", "kiki", "dawei", "ann", "bo", "chen", "mia"]
GENDERS = ["0", "1", "female", "male", "f", "m", "女", "男", "unknown", ""]


def comment(rng: random.Random, polarity: str) -> str:
    words = []
    if polarity == "pos":
        lexicon, context = POSITIVE, POS_CONTEXT
    elif polarity == "neg":
        lexicon, context = NEGATIVE, NEG_CONTEXT
    else:
        lexicon, context = [], []
    for _ in range(rng.randint(5, 11)):
        r = rng.random()
        if lexicon and r < 0.35:
            words.append(rng.choice(lexicon))
        elif context and r < 0.55:
            words.append(rng.choice(context))
        elif r < 0.62:
            words.append(
                rng.choices(list(FREQUENT), weights=list(FREQUENT.values()))[0]
            )
        else:
            words.append(rng.choice(NEUTRAL))
    text = " ".join(words)
    if rng.random() < 0.2:
        text += rng.choice(["!", "!!", "?", "...", ","])
    return text


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", type=Path, default=Path("data"))
    ap.add_argument("--comments", type=int, default=3000)
    ap.add_argument("--seed", type=int, default=2020)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    args.out.mkdir(parents=True, exist_ok=True)

    with open(args.out / "toy_comments.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["nickname", "age", "gender", "likes", "comment"])
        for i in range(args.comments):
            polarity = rng.choices(["pos", "neg", "neu"], weights=[5, 3, 2])[0]
            age = str(rng.randint(14, 60)) if rng.random() > 0.05 else "abc"
            likes = str(rng.randint(0, 5000)) if rng.random() > 0.02 else ""
            w.writerow([
                f"{rng.choice(NAMES)}{i}", age, rng.choice(GENDERS), likes,
                comment(rng, polarity),
            ])

    # First 15 of each list seed the densifier; the remainder are held out.
    with open(args.out / "toy_seeds.tsv", "w", encoding="utf-8") as f:
        for word in POSITIVE[:15]:
            f.write(f"{word}\tpos\n")
        for word in NEGATIVE[:15]:
            f.write(f"{word}\tneg\n")
    with open(args.out / "toy_labels.tsv", "w", encoding="utf-8") as f:
        for word in POSITIVE[15:]:
            f.write(f"{word}\tpos\n")
        for word in NEGATIVE[15:]:
            f.write(f"{word}\tneg\n")


if __name__ == "__main__":
    main()
