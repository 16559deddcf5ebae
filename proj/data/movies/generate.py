"""Writes the movies-like fixture: ontology.txt, nodes.csv, links.csv.

Movies are made by studios that specialise in genres and mostly shoot at home;
awards are handed out in arbitrary countries. Deterministic for a fixed seed.
"""
import random
from pathlib import Path

SEED = 7
HERE = Path(__file__).resolve().parent

TRIPLES = [
    ("person", "acted-in", "movie"),
    ("person", "directed", "movie"),
    ("person", "married-to", "person"),
    ("person", "founded", "studio"),
    ("movie", "made-by", "studio"),
    ("movie", "in-genre", "genre"),
    ("movie", "sequel-of", "movie"),
    ("movie", "shot-in", "country"),
    ("studio", "produces", "genre"),
    ("studio", "located-in", "country"),
    ("award", "awarded-to", "person"),
    ("award", "awarded-for", "movie"),
    ("award", "awarded-in", "country"),
]


def main():
    rng = random.Random(SEED)
    countries = [f"country{i}" for i in range(5)]
    genres = [f"genre{i}" for i in range(6)]
    studios = [f"studio{i}" for i in range(8)]
    persons = [f"person{i:03d}" for i in range(160)]
    movies = [f"movie{i:03d}" for i in range(80)]
    awards = [f"award{i:02d}" for i in range(24)]

    nodes = [(c, "country") for c in countries]
    nodes += [(g, "genre") for g in genres]
    nodes += [(s, "studio") for s in studios]
    nodes += [(p, "person") for p in persons]
    nodes += [(m, "movie") for m in movies]
    nodes += [(a, "award") for a in awards]

    links = set()
    home = {s: countries[i % len(countries)] for i, s in enumerate(studios)}
    speciality = {s: rng.sample(genres, 2) for s in studios}
    # Each studio keeps a stable pool of actors.
    pool = {s: persons[i * 20:(i + 1) * 20] for i, s in enumerate(studios)}
    for s in studios:
        links.add((s, home[s], "located-in"))
        for g in speciality[s]:
            links.add((s, g, "produces"))
    for i, s in enumerate(studios[:3]):
        links.add((pool[s][0], s, "founded"))

    cast = {}
    for i, m in enumerate(movies):
        s = studios[i % len(studios)]
        links.add((m, s, "made-by"))
        links.add((m, rng.choice(speciality[s]), "in-genre"))
        where = home[s] if rng.random() < 0.2 else rng.choice(countries)
        links.add((m, where, "shot-in"))
        actors = rng.sample(pool[s], 5)
        cast[m] = actors
        for p in actors:
            links.add((p, m, "acted-in"))
        links.add((rng.choice(pool[s]), m, "directed"))
        if i >= len(studios) and rng.random() < 0.3:
            links.add((m, movies[i - len(studios)], "sequel-of"))
    for s in studios:
        for _ in range(16):
            a, b = rng.sample(pool[s], 2)
            links.add((min(a, b), max(a, b), "married-to"))
    for a in awards:
        m = rng.choice(movies)
        links.add((a, m, "awarded-for"))
        links.add((a, rng.choice(cast[m]), "awarded-to"))
        links.add((a, rng.choice(countries), "awarded-in"))

    with open(HERE / "ontology.txt", "w") as f:
        f.write("# movies-like ontology\n")
        for t in ["award", "country", "genre", "movie", "person", "studio"]:
            f.write(f"nodetype {t}\n")
        for s, l, d in TRIPLES:
            f.write(f"allow {s},{l},{d}\n")
    with open(HERE / "nodes.csv", "w") as f:
        f.write("id,type\n")
        for n, t in nodes:
            f.write(f"{n},{t}\n")
    with open(HERE / "links.csv", "w") as f:
        f.write("source,target,type\n")
        for s, d, l in sorted(links):
            f.write(f"{s},{d},{l}\n")
    return nodes, sorted(links)


if __name__ == "__main__":
    main()
