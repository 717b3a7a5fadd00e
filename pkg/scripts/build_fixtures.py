"""Regenerate the bundled fixture embeddings and lexicon victim weights.

The vectors are synthetic: every synonym cluster gets a random unit centre and
each member is ``a * centre + sqrt(1 - a**2) * noise`` with the noise
orthogonal to the centre, so two members of a cluster have cosine close to
``a_i * a_j``.  Words outside clusters get random unit vectors that stay far
from every other word.  Run from the repository root:

    python scripts/build_fixtures.py
"""

import json
from pathlib import Path

import numpy as np

DIM = 50
SEED = 20201
MAX_UNRELATED_COSINE = 0.42
OUT = Path(__file__).resolve().parents[1] / "src" / "textdecepter" / "data"

# (word, closeness to the cluster centre, victim weight)
CLUSTERS = [
    [("beautiful", .95, 1), ("resplendent", .93, 0), ("lovely", .86, 1), ("gorgeous", .82, 1), ("stunning", .78, 1)],
    [("good", .95, 1), ("decent", .90, 0), ("nice", .85, 1), ("fine", .80, 1), ("solid", .75, 0)],
    [("great", .95, 2), ("terrific", .92, 1), ("wonderful", .88, 2), ("excellent", .86, 2), ("superb", .83, 2),
     ("marvelous", .80, 1)],
    [("funny", .95, 1), ("hilarious", .90, 2), ("amusing", .87, 1), ("comical", .84, 0), ("humorous", .80, 1)],
    [("clever", .95, 1), ("smart", .90, 1), ("witty", .87, 1), ("shrewd", .83, 0), ("intelligent", .80, 1)],
    [("enjoyable", .95, 1), ("pleasant", .90, 1), ("pleasurable", .86, 0), ("agreeable", .82, 0)],
    [("moving", .95, 1), ("touching", .92, 1), ("poignant", .88, 1), ("affecting", .84, 0), ("stirring", .80, 0)],
    [("strong", .95, 1), ("powerful", .90, 1), ("potent", .85, 0), ("mighty", .80, 0)],
    [("fresh", .95, 1), ("original", .90, 1), ("inventive", .86, 1), ("novel", .83, 0), ("innovative", .80, 1)],
    [("brilliant", .95, 2), ("dazzling", .90, 1), ("luminous", .86, 0), ("radiant", .82, 1)],
    [("bad", .95, -1), ("poor", .90, -1), ("lousy", .87, -2), ("flawed", .84, 0), ("inferior", .80, -1)],
    [("terrible", .95, -2), ("awful", .92, -2), ("horrible", .89, -2), ("dreadful", .86, -1), ("spooky", .80, 0),
     ("appalling", .78, -1)],
    [("boring", .95, -1), ("dull", .92, -1), ("tedious", .88, -1), ("monotonous", .84, 0), ("uninteresting", .80, -1)],
    [("stupid", .95, -1), ("dumb", .90, -1), ("silly", .87, -1), ("foolish", .83, 0), ("idiotic", .80, -1)],
    [("sad", .95, -1), ("bleak", .90, 0), ("gloomy", .86, 0), ("unhappy", .83, -1), ("miserable", .80, -1)],
    [("cheap", .95, -1), ("miserly", .88, 0), ("shoddy", .85, -1), ("stingy", .82, 0)],
    [("weak", .95, -1), ("feeble", .90, -1), ("flimsy", .86, -1), ("frail", .82, 0)],
    [("unbearable", .95, -2), ("intolerable", .90, -1), ("insufferable", .86, -1), ("unendurable", .82, 0)],
    [("messy", .95, -1), ("sloppy", .90, -1), ("chaotic", .86, -1), ("untidy", .82, 0)],
    [("predictable", .95, -1), ("formulaic", .90, -1), ("foreseeable", .85, 0), ("unsurprising", .82, 0)],
    [("love", .95, 1), ("adore", .90, 1), ("cherish", .86, 0), ("enjoy", .82, 1)],
    [("loved", .95, 1), ("adored", .90, 1), ("cherished", .86, 0), ("enjoyed", .82, 1)],
    [("hate", .95, -1), ("detest", .90, -1), ("despise", .86, -1), ("loathe", .82, 0)],
    [("hated", .95, -1), ("detested", .90, -1), ("despised", .86, -1), ("loathed", .82, 0)],
    [("undermining", .95, -1), ("jeopardizing", .90, 0), ("weakening", .86, -1), ("jeopardizes", .84, 0),
     ("undermines", .82, -1), ("eroding", .80, 0)],
    [("fails", .95, -1), ("flops", .90, -1), ("falters", .86, 0)],
    [("succeeds", .95, 1), ("triumphs", .90, 1), ("thrives", .86, 1), ("prospers", .82, 0)],
    [("shines", .95, 1), ("sparkles", .90, 1), ("glows", .85, 0)],
    [("drags", .95, -1), ("plods", .90, -1), ("crawls", .85, 0)],
    [("believe", .95, 0), ("feel", .90, 0), ("think", .86, 0), ("reckon", .82, 0)],
    [("seems", .95, 0), ("appears", .90, 0), ("transpires", .85, 0)],
    [("recommend", .95, 1), ("endorse", .90, 0), ("advocate", .85, 0), ("suggest", .80, 0)],
    [("wasted", .95, -1), ("squandered", .90, 0), ("misspent", .85, 0)],
    [("beautifully", .95, 1), ("wonderfully", .90, 1), ("gracefully", .86, 0), ("elegantly", .82, 1)],
    [("badly", .95, -1), ("poorly", .90, -1), ("terribly", .86, -1), ("dreadfully", .82, 0), ("awfully", .80, 0)],
    [("brilliantly", .95, 1), ("superbly", .90, 1), ("admirably", .86, 0), ("splendidly", .82, 1)],
    [("extremely", .95, 0), ("incredibly", .90, 0), ("remarkably", .86, 0), ("highly", .82, 0)],
    [("success", .95, 1), ("attainment", .90, 0), ("triumph", .87, 1), ("achievement", .84, 1),
     ("accomplishment", .80, 0)],
    [("masterpiece", .95, 2), ("gem", .90, 1), ("classic", .86, 1), ("treasure", .82, 1)],
    [("mess", .95, -1), ("disaster", .90, -2), ("fiasco", .87, -1), ("debacle", .84, -1), ("shambles", .80, 0)],
    [("fun", .95, 1), ("enjoyment", .90, 1), ("amusement", .86, 0), ("entertainment", .82, 1)],
    [("flaw", .95, -1), ("defect", .90, -1), ("fault", .86, -1), ("shortcoming", .83, 0), ("blemish", .80, 0)],
    [("laughs", .95, 1), ("chuckles", .90, 0), ("giggles", .86, 0), ("kidding", .82, 0)],
    [("movie", .95, 0), ("film", .92, 0), ("picture", .88, 0), ("flick", .84, 0)],
    [("plot", .95, 0), ("storyline", .90, 0), ("narrative", .86, 0)],
    [("waste", .95, -1), ("squandering", .88, 0)],
    [("joy", .95, 1), ("delight", .90, 1), ("pleasure", .86, 1), ("glee", .82, 0)],
]

FUNCTION_WORDS = """
the a an this that these those some any no all every each both another such
i you he she it we they me him her us them my your his its our their who what which when where why how
of in on at by for with about from into through after before than as like to up out off over down
and or but so if because while though although until since yet
not n't very too also just only even really quite rather almost always never often still then there here
now again ever soon already maybe perhaps simply certainly actually completely totally truly firmly well
is are was were be been being am has have had do does did will would can could may might must should
's 've 'd 'll 're 'm ca wo more most less much many few other same own one two
""".split()

NEUTRAL_WORDS = """
acting performance performances cast director script ending scene scenes character characters story time
way people book game video music score camera dialogue actor actors actress screen minutes hours year years
night end life world man woman family audience fans comedy drama thriller horror sequel hero villain effects
pace tone theme ideas moments lines jokes twist soundtrack studio lead role star work job thing things lot
bit kind part hour reality voice creator falsehoods pile heaps stifling comic real strange lion king city war
watch see saw seen make made show know get got go goes went look looks find found give takes tell says
said want try keep come comes came left use read understand plays played starts ends turns watching going
new old big small little long short whole young full hard early late final main different middle
""".split()


def _unit(v):
    return v / np.linalg.norm(v)


def _far_random(rng, anchors):
    while True:
        v = _unit(rng.standard_normal(DIM))
        if not anchors or np.max(np.abs(np.array(anchors) @ v)) < MAX_UNRELATED_COSINE:
            return v


def build():
    rng = np.random.default_rng(SEED)
    words, vectors, weights = [], [], {}
    anchors = []
    for cluster in CLUSTERS:
        centre = _far_random(rng, anchors)
        anchors.append(centre)
        for word, closeness, weight in cluster:
            while True:
                noise = rng.standard_normal(DIM)
                noise = _unit(noise - (noise @ centre) * centre)
                v = closeness * centre + np.sqrt(1 - closeness ** 2) * noise
                others = [a for a in anchors if a is not centre]
                if not others or np.max(np.abs(np.array(others) @ v)) < MAX_UNRELATED_COSINE:
                    break
            words.append(word)
            vectors.append(v)
            if weight:
                weights[word] = weight
    clustered = set(words)
    for word in FUNCTION_WORDS + NEUTRAL_WORDS:
        if word in clustered or word in words:
            continue
        v = _far_random(rng, anchors + vectors)
        anchors.append(v)
        words.append(word)
        vectors.append(v)
    assert len(words) == len(set(words)), "duplicate fixture words"
    assert len(words) <= 500, len(words)
    return words, np.array(vectors), weights


def main():
    words, vectors, weights = build()
    with open(OUT / "fixture_embeddings.txt", "w", encoding="utf-8") as fh:
        for word, vec in zip(words, vectors):
            fh.write(word + " " + " ".join(f"{x:.6f}" for x in vec) + "\n")
    lexicon = {"__bias__": 0.0, "__positive_label__": "POS", "__negative_label__": "NEG"}
    lexicon.update(sorted(weights.items()))
    with open(OUT / "fixture_lexicon.json", "w", encoding="utf-8") as fh:
        json.dump(lexicon, fh, indent=1)
        fh.write("\n")
    print(f"{len(words)} words, dim {DIM}, {len(weights)} weighted")


if __name__ == "__main__":
    main()
