"""Group lexicons and counterfactual term mappings."""
