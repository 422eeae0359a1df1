"""Definition of Counterfactual constants."""

DOC_P = "RBO persistence: probability of looking at the next rank."
DOC_DEPTH = "Evaluation depth of the RBO series."
DOC_VARIANT = "Truncated series or extrapolated to infinite depth."
DOC_DOCUMENTS = "Number of documents rewritten."
DOC_CHANGED = "Number of documents with at least one substitution."
DOC_SUBSTITUTIONS = "Count of each 'source->counterpart' substitution."
DOC_PER_QUERY = "Query id to RBO between original and counterfactual lists."
DOC_MEAN = "Mean RBO over the compared queries."
DOC_MISSING = "Queries in only one of the two runs."

# Tokens after which a pos sensitive term is read as a personal pronoun.
PRONOUN_FOLLOWERS = frozenset(
    {
        "a", "about", "after", "again", "against", "all", "also", "an", "and",
        "any", "are", "around", "as", "at", "away", "back", "be", "because",
        "been", "before", "being", "but", "by", "can", "could", "did", "do",
        "does", "down", "during", "for", "from", "had", "has", "have", "he",
        "her", "here", "him", "his", "how", "i", "if", "in", "into", "is",
        "it", "its", "just", "may", "me", "might", "more", "most", "must",
        "my", "no", "not", "now", "of", "off", "on", "once", "only", "or",
        "out", "over", "she", "should", "since", "so", "some", "than", "that",
        "the", "their", "them", "then", "there", "these", "they", "this",
        "those", "through", "to", "too", "under", "until", "up", "very", "was",
        "we", "were", "what", "when", "where", "which", "while", "who", "why",
        "will", "with", "would", "you", "your",
    }
)
CLAUSE_BREAK = frozenset(".,;:!?()[]{}\"")
