#!/usr/bin/env python3
"""Regenerate the demo knowledge base shipped in this directory.

Writes triples.tsv, aliases.tsv, relations.tsv, and wikidata.tsv (a twin
store with a deterministic subset of facts removed, for cross-KB
intersection tests). Output is fully determined by SEED; re-running the
script leaves the files byte-identical.
"""

from __future__ import annotations

import random
import unicodedata
from pathlib import Path

SEED = 20250810
HERE = Path(__file__).resolve().parent

FIRST_NAMES = [
    "Aaron", "Beatriz", "Carlos", "Daniela", "Emeka", "Fatima", "Gustav",
    "Haruki", "Ingrid", "Jorge", "Katarina", "Liam", "Mariana", "Nadia",
    "Oskar", "Priya", "Quentin", "Rosa", "Stefan", "Tomoko", "Umberto",
    "Vera", "Wendell", "Ximena",
]

LAST_NAMES = [
    "Abbott", "Bergström", "Castellanos", "Duarte", "Eriksen", "Fontaine",
    "Gutiérrez", "Hashimoto", "Ivanov", "Jansen", "Kowalski", "Lindqvist",
    "Moreau", "Nakamura", "Okafor", "Pereira", "Quispe", "Rossi", "Sørensen",
    "Takahashi", "Ueda", "Vasquez", "Weber", "Yamamoto", "Zielinski",
    "Andrade", "Bianchi", "Costa", "Dimitrov", "Egede", "Farkas", "Grieg",
    "Horvat", "Iglesias", "Johansson", "Kovacs",
]

COUNTRIES = [
    "United States", "France", "Brazil", "Japan", "Germany", "Argentina",
    "Spain", "Italy", "Canada", "Portugal", "Nigeria", "Georgia (country)",
]
# United States is deliberately over-represented so the majority baseline
# has an unambiguous modal object for the citizenship relation.
COUNTRY_WEIGHTS = [30, 9, 8, 8, 7, 7, 6, 6, 5, 5, 5, 4]

TEAMS = [
    "FC Barcelona", "Paris Saint-Germain FC", "Inter Miami",
    "Argentina national football team", "Real Madrid", "Manchester United",
    "Bayern Munich", "Juventus", "AC Milan", "Ajax", "Boca Juniors",
    "River Plate", "Santos FC", "Chelsea FC",
]

PARENT_BODIES = ["Sun", "Jupiter", "Saturn", "Neptune", "Alpha Centauri A"]
PARENT_WEIGHTS = [55, 15, 12, 10, 8]

AWARDS = [
    "National Medal of Arts", "Nobel Prize in Literature",
    "Grammy Award for Best New Artist", "Academy Award for Best Picture",
    "Fields Medal", "Turing Award", "Pulitzer Prize for Fiction",
    "Booker Prize", "Hugo Award for Best Novel", "Palme d'Or",
]

REGION_SYLLABLES = [
    "Al", "Ber", "Cor", "Dra", "El", "Fen", "Gor", "Hal", "Is", "Jor",
    "Kel", "Lor", "Mar", "Nor", "Or", "Pel", "Quil", "Ras", "Sol", "Tar",
    "Ul", "Var", "Wes", "Yor",
]
REGION_TAILS = ["mia", "land", "via", "stan", "nor", "dia", "gard", "mark"]

RELATIONS = [
    ("P27", "country of citizenship", "What are the nationalities of [S]?", 0),
    ("P54", "member of sports team", "Which teams has [S] played for?", 0),
    ("P36", "capital", "What is the capital of [S]?", 0),
    ("P397", "parent astronomical body", "What is the parent body of [S]?", 0),
    ("P166", "award received", "What awards has [S] won?", 0),
    ("P127", "owned by", "Who or what are the owners of [S]?", 0),
    ("P569", "date of birth", "When was [S] born?", 1),
]

ALIASES = [
    ("Paris Saint-Germain FC", "PSG"),
    ("Paris Saint-Germain FC", "Paris SG"),
    ("Paris Saint-Germain FC", "Paris Saint-Germain"),
    ("United States", "USA"),
    ("United States", "U.S."),
    ("United States", "United States of America"),
    ("RATP Group", "RATP"),
    ("RATP Group", "Régie Autonome des Transports Parisiens"),
    ("FC Barcelona", "Barça"),
    ("FC Barcelona", "Barcelona"),
    ("Manchester United", "Man Utd"),
    # Deliberately ambiguous alias shared by two entities.
    ("Georgia (country)", "Georgia"),
    ("Georgia (U.S. state)", "Georgia"),
]

OWNED_BY = [
    ("Villiers (Paris Métro)", ["RATP Group"]),
    ("Monceau (Paris Métro)", ["RATP Group"]),
    ("Gare de Lyon", ["SNCF"]),
    ("Camp Nou", ["FC Barcelona"]),
    ("Parc des Princes", ["Paris Saint-Germain FC"]),
    ("Old Trafford", ["Manchester United"]),
    ("Allianz Arena", ["Bayern Munich"]),
    ("San Siro", ["AC Milan", "Inter Milan"]),
    ("La Bombonera", ["Boca Juniors"]),
    ("Johan Cruyff Arena", ["Ajax"]),
    ("Estadio Monumental", ["River Plate"]),
    ("Stamford Bridge", ["Chelsea FC"]),
]


def nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def sample_people(rng: random.Random, count: int) -> list[str]:
    pool = [f"{f} {l}" for f in FIRST_NAMES for l in LAST_NAMES]
    return rng.sample(pool, count)


def weighted_unique(rng: random.Random, pool: list[str], weights: list[int], k: int) -> list[str]:
    picked: list[str] = []
    while len(picked) < k:
        choice = rng.choices(pool, weights=weights, k=1)[0]
        if choice not in picked:
            picked.append(choice)
    return picked


def region_names(rng: random.Random, count: int) -> list[str]:
    names: set[str] = set()
    while len(names) < count - 2:
        name = rng.choice(REGION_SYLLABLES) + rng.choice(REGION_SYLLABLES).lower() + rng.choice(REGION_TAILS)
        names.add(f"Province of {name}")
    ordered = sorted(names)
    rng.shuffle(ordered)
    return ordered + ["Canton of Zürich", "State of São Paulo"]


def build_triples(rng: random.Random) -> list[tuple[str, str, str]]:
    triples: list[tuple[str, str, str]] = []

    citizens = sample_people(rng, 220)
    for person in citizens:
        k = rng.choices([1, 2], weights=[7, 3], k=1)[0]
        for country in weighted_unique(rng, COUNTRIES, COUNTRY_WEIGHTS, k):
            triples.append((person, "P27", country))

    players = sample_people(rng, 204) + ["Lionel Messi"]
    messi_teams = [
        "FC Barcelona", "Paris Saint-Germain FC", "Inter Miami",
        "Argentina national football team",
    ]
    for player in players:
        if player == "Lionel Messi":
            teams = messi_teams
        else:
            k = rng.choices([1, 2, 3, 4], weights=[35, 35, 20, 10], k=1)[0]
            teams = rng.sample(TEAMS, k)
        for team in teams:
            triples.append((player, "P54", team))

    for region in region_names(rng, 208):
        if region == "Canton of Zürich":
            capital = "Zürich"
        elif region == "State of São Paulo":
            capital = "São Paulo"
        else:
            capital = region.removeprefix("Province of ") + " City"
        triples.append((region, "P36", capital))

    kepler_ids = rng.sample(range(4, 999), 70)
    for n in kepler_ids:
        triples.append((f"Kepler-{n}c", "P397", f"Kepler-{n}"))
    minor_ids = rng.sample(range(1000, 9999), 142)
    for n in minor_ids:
        parent = rng.choices(PARENT_BODIES, weights=PARENT_WEIGHTS, k=1)[0]
        triples.append((f"Minor planet {n}", "P397", parent))

    laureates = sample_people(rng, 150)
    for person in laureates:
        k = rng.choices([1, 2], weights=[7, 3], k=1)[0]
        for award in rng.sample(AWARDS, k):
            triples.append((person, "P166", award))

    for venue, owners in OWNED_BY:
        for owner in owners:
            triples.append((venue, "P127", owner))

    born = sample_people(rng, 60)
    for person in born:
        date = f"{rng.randint(1900, 2005)}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
        triples.append((person, "P569", date))

    return triples


def write_tsv(path: Path, rows: list[tuple[str, ...]]) -> None:
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write("\t".join(nfc(field) for field in row) + "\n")


def main() -> None:
    rng = random.Random(SEED)
    triples = build_triples(rng)

    write_tsv(HERE / "triples.tsv", triples)
    write_tsv(HERE / "aliases.tsv", ALIASES)
    write_tsv(HERE / "relations.tsv", [(rid, label, template, str(lit)) for rid, label, template, lit in RELATIONS])
    # Twin store: drop every 41st fact to exercise cross-KB intersection.
    write_tsv(HERE / "wikidata.tsv", [t for i, t in enumerate(triples) if i % 41 != 40])

    print(f"wrote {len(triples)} triples to {HERE}")


if __name__ == "__main__":
    main()
