"""Class-weighted evaluation of multi-class classifiers."""
