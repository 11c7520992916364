"""EvenQuads cards, quad codes and their classification tables."""
