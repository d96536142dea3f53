class ExtractorBase:
    """
    Base class for constructive extractors.

    An extractor turns a density hypothesis into an explicit certificate.
    Subclasses report whether their hypothesis holds on an input and, in
    ``extract``, either return a certificate or raise the error that
    distinguishes "hypothesis unmet" from "contract broken".
    """

    name = "extractor"

    def check_hypothesis(self, *args, **kwargs):
        """Return True when the extractor is guaranteed to succeed on these inputs."""
        raise NotImplementedError("Subclasses should implement this method.")

    def extract(self, *args, **kwargs):
        """Return a certificate for the inputs."""
        raise NotImplementedError("Subclasses should implement this method.")

    def __repr__(self):
        return f"{type(self).__name__}()"
