"""Definition of Lexicon constants."""

DOC_GROUP_ID = "Group unique name, e.g. 'female'."
DOC_TERMS = "Lowercase terms representing the group."
DOC_GROUPS = "Ordered groups. The order is the order of every group vector."
DOC_TARGET = "Target representation of each group. Values sum to 1."
DOC_TERM_PAIRS = "Term to counterpart substitutions. Listed in both directions."
DOC_NAME_PAIRS = "Name to opposite group name substitutions."
DOC_POS_PAIRS = "Substitutions depending on the part of speech of the token."

NAME_TAG = "NAME"
TARGET_TOLERANCE = 1e-9
