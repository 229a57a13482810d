"""Built-in catalog: quality attributes, the 33 patterns, and the four decision models."""

from __future__ import annotations

from .kb import KnowledgeBase
from .model import (
    ComplementsEdge,
    DecisionModel,
    FlowEdge,
    Node,
    NodeKind,
    Pattern,
    QaImpact,
    Polarity,
    QualityAttribute,
)

_POS = Polarity.POSITIVE
_NEG = Polarity.NEGATIVE


def _qa(qa_id: str, display: str, *aliases: str) -> QualityAttribute:
    return QualityAttribute(qa_id, display, tuple(aliases))


QA_CATALOG = (
    _qa("availability", "Availability"),
    _qa("scalability", "Scalability"),
    _qa("cohesion", "Cohesion"),
    _qa("deployment", "Deployment", "deployability"),
    _qa("performance", "Performance"),
    _qa("maintainability", "Maintainability"),
    _qa("flexibility", "Flexibility"),
    _qa("granularity", "Granularity"),
    _qa("reliability", "Reliability"),
    _qa("reusability", "Reusability"),
    _qa("security", "Security"),
    _qa("functional-suitability", "Functional suitability"),
    _qa("portability", "Portability"),
    _qa("response-time", "Response time"),
    _qa("data-consistency", "Data consistency"),
    _qa("execution-cost", "Execution cost"),
    _qa("coupling", "Coupling"),
    _qa("understandability", "Understandability"),
    _qa("confidentiality", "Confidentiality"),
    _qa("integrity", "Integrity"),
    _qa("accountability", "Accountability"),
    _qa("authenticity", "Authenticity"),
    _qa("recoverability", "Recoverability"),
    _qa("complexity", "Complexity"),
    _qa("resilience", "Resilience", "resiliency"),
    _qa("latency", "Latency"),
    _qa("testability", "Testability"),
    _qa("interoperability", "Interoperability"),
    _qa("development-cost", "Development cost"),
)


def _plus(qa: str, note: str | None = None) -> QaImpact:
    return QaImpact(qa, _POS, note)


def _minus(qa: str, note: str | None = None) -> QaImpact:
    return QaImpact(qa, _NEG, note)


# Impact polarity follows direction of benefit: "+" marks an improvement of the
# attribute (looser coupling, lower response time), "-" a degradation.

PATTERNS = (
    # --- application decomposition -------------------------------------------
    Pattern(
        id="decomposed-by-subdomains",
        name="Decomposed by subdomains",
        area="decomposition",
        summary="Define services corresponding to Domain-Driven Design (DDD) subdomains.",
        impacts=(
            _plus("flexibility"),
            _plus("granularity"),
            _plus("reliability"),
            _plus("reusability"),
            _plus("security"),
            _plus("functional-suitability"),
            _plus("portability"),
        ),
        constraints=(
            "Practitioners need to understand the overall business to define each microservice's responsibility, boundaries, and relationships.",
        ),
        sources=("microservices.io", "aws-prescriptive-guidance"),
    ),
    Pattern(
        id="decomposed-by-business-capabilities",
        name="Decomposed by business capabilities",
        area="decomposition",
        summary="Define services corresponding to business capabilities.",
        impacts=(
            _plus("granularity"),
            _plus("performance"),
            _plus("security"),
            _minus("flexibility", "application design is tightly coupled with the business model"),
        ),
        constraints=(
            "Business capabilities must be identified by understanding the client organization's structure, purposes, and business processes.",
        ),
        sources=("microservices.io", "aws-prescriptive-guidance"),
    ),
    Pattern(
        id="service-per-team",
        name="Service per team",
        area="decomposition",
        summary="Break down the application into microservices that individual teams can manage.",
        impacts=(
            _plus("availability"),
            _plus("scalability"),
            _plus("cohesion"),
            _plus("deployment"),
            _plus("performance"),
            _plus("maintainability"),
            _minus("development-cost", "large projects need to hire more people"),
        ),
        constraints=(
            "Only one small team (e.g., 5-9 people) owns one microservice, which it independently develops, tests, deploys, and scales.",
            "Teams interact with other teams to negotiate APIs.",
        ),
        sources=("microservices.io", "aws-prescriptive-guidance"),
    ),
    Pattern(
        id="decomposed-by-transactions",
        name="Decomposed by transactions",
        area="decomposition",
        summary=(
            "An application typically needs to call multiple microservices to complete one "
            "business transaction. To avoid latency issues, services can be defined based on "
            "business transactions."
        ),
        impacts=(
            _plus("response-time"),
            _plus("data-consistency"),
            _plus("availability"),
            _minus("execution-cost", "multiple functionalities implemented in one microservice"),
            _minus("coupling", "multiple functionalities implemented in one microservice"),
        ),
        constraints=(
            "Each business transaction carries one task; a microservice holds the functionalities of several business transactions.",
        ),
        sources=("aws-prescriptive-guidance",),
    ),
    Pattern(
        id="scenario-analysis",
        name="Scenario analysis",
        area="decomposition",
        summary="Identify the business capabilities by analyzing the nouns and verbs from given business scenarios.",
        impacts=(
            _plus("scalability"),
            _minus("performance", "imprecise boundaries of microservices"),
            _minus("coupling", "imprecise boundaries of microservices"),
        ),
        constraints=(
            "Practitioners need enough time to develop the scenarios and describe the architecture before evaluating them.",
        ),
        sources=("scenario-refactoring-study",),
    ),
    Pattern(
        id="graph-based-approach",
        name="Graph-based approach",
        area="decomposition",
        summary=(
            "Identify microservices from the source code of existing monolithic applications by "
            "graph clustering and visualization techniques."
        ),
        impacts=(
            _plus("reusability", "reuses the existing code"),
            _plus("understandability", "visualizes extracted microservices and the whole system structure"),
        ),
        constraints=(
            "Requires the source code of an existing monolithic application for clustering and visualization.",
        ),
        sources=("sarf-clustering-study",),
    ),
    Pattern(
        id="data-flow-driven-approach",
        name="Data Flow-Driven (DFD) approach",
        area="decomposition",
        summary=(
            "Follow a top-down approach in which data flow diagrams contain the business "
            "requirements that are later partitioned through a formal algebra algorithm for "
            "identifying microservices."
        ),
        impacts=(
            _plus("availability"),
            _plus("scalability"),
            _plus("flexibility"),
            _minus("performance", "complex data flow diagrams"),
            _minus("reusability", "complex data flow diagrams"),
        ),
        constraints=(
            "Requires eliciting business requirements and creating fine-grained data flow diagrams.",
        ),
        sources=("dataflow-decomposition-study",),
    ),
    # --- microservices security ----------------------------------------------
    Pattern(
        id="access-and-identity-tokens",
        name="Access and identity tokens",
        area="security",
        summary="Verifies that a user is authorized to perform specific operations or not",
        impacts=(
            _plus("confidentiality"),
            _plus("integrity"),
            _plus("accountability"),
            _plus("authenticity"),
            _plus("recoverability"),
        ),
        constraints=(
            "Implemented by following access- and token-based standards such as OAuth, OAuth2, OpenID, HTTP Basic Auth, and JWT.",
        ),
        sources=("security-patterns-blog", "microservices.io"),
    ),
    Pattern(
        id="layered-defense",
        name="Layered defence",
        area="security",
        summary="Protect microservices systems by introducing multiple gateways and API-lead architecture",
        impacts=(
            _plus("security", "gateways make it difficult for an intruder to penetrate deep into the system"),
            _plus("confidentiality"),
            _plus("integrity"),
            _minus("complexity"),
        ),
        constraints=(
            "The application is converted into API layers, each with its own API gateway holding layer-specific authentication and authorization policies.",
        ),
        sources=("security-patterns-blog",),
    ),
    Pattern(
        id="service-level-authorization",
        name="Service-level authorization",
        area="security",
        summary="Give freedom to each microservice to control and enforce the access control policies for communication",
        impacts=(
            _plus("security"),
            _plus("availability"),
            _plus("resilience"),
            _minus("latency", "additional network calls of the remote PDP endpoint"),
        ),
        constraints=(
            "Access control policies (PAP, PDP, PEP, PIP) are implemented through languages and notions such as XACML and NGAC.",
        ),
        sources=("owasp-microservices-cheatsheet",),
    ),
    Pattern(
        id="edge-level-authorization",
        name="Edge-level authorization",
        area="security",
        summary="Secure the edge points (API gateway) of microservices",
        impacts=(
            _plus("security"),
            _plus("integrity"),
        ),
        constraints=(
            "Hard to implement in a complex ecosystem with many roles and access control policies.",
            "Only the API gateway is secured, which violates the defense-in-depth policy.",
        ),
        sources=("owasp-microservices-cheatsheet",),
    ),
    Pattern(
        id="https-enforcement",
        name="HTTPS enforcement",
        area="security",
        summary="Suggests using HTTPS instead of HTTP to secure communication between microservices.",
        impacts=(
            _plus("security", "SSL establishes an encrypted link between microservices"),
        ),
        sources=("security-patterns-blog", "owasp-microservices-cheatsheet"),
    ),
    Pattern(
        id="api-rate-limiting",
        name="API rate limiting",
        area="security",
        summary="Slow down the attacks from intruders",
        impacts=(
            _plus("security"),
            _plus("authenticity"),
        ),
        constraints=(
            "Implemented in the microservices code or with an API gateway.",
        ),
        sources=("security-patterns-blog",),
    ),
    Pattern(
        id="encrypt-and-protect-secrets",
        name="Encrypt and protect secrets",
        area="security",
        summary=(
            "Use tools (e.g., HashiCorp Vault, Microsoft Azure Key Vault, Amazon KMS) to secure "
            "the API key, user credentials, and other credentials related to microservices."
        ),
        impacts=(
            _plus("security", "secures API keys, user credentials, and other secrets"),
        ),
        constraints=(
            "Secrets are stored using key management services such as Azure KeyVault, HashiCorp Vault, Spring Vault, and Amazon KMS.",
        ),
        sources=("security-patterns-blog", "okta-developer-blog"),
    ),
    Pattern(
        id="scan-dependencies",
        name="Scan dependencies",
        area="security",
        summary="Scanning programs are used to detect the security vulnerabilities that may occurs because of dependency issues",
        constraints=(
            "Scanning covers the deployment pipeline, the primary line of code, released code, and new code contributions.",
        ),
        sources=("security-patterns-blog",),
    ),
    # --- microservices communication ------------------------------------------
    Pattern(
        id="api-gateway",
        name="API gateway",
        area="communication",
        summary="Provide a single entry point to clients for accessing microservices",
        impacts=(
            _plus("security"),
            _plus("availability"),
            _plus("portability"),
            _minus("response-time", "additional network hop"),
            _minus("complexity", "development, deployment, and management of the API gateway"),
        ),
        sources=("microservices.io",),
    ),
    Pattern(
        id="bff",
        name="Backend for frontend",
        area="communication",
        summary="Define a separate API gateway according to type of application client",
        impacts=(
            _plus("security"),
            _plus("availability"),
            _plus("portability"),
            _plus("response-time", "dedicated API gateway for each type of application client"),
        ),
        constraints=(
            "Not appropriate for single-interface (e.g., only Web interface) microservices systems.",
        ),
        sources=("microservices.io",),
    ),
    Pattern(
        id="aggregator-microservice",
        name="Aggregator microservice",
        area="communication",
        summary="Collect related items of data from multiple microservices",
        impacts=(
            _plus("scalability"),
            _plus("flexibility"),
            _minus("latency"),
        ),
        constraints=(
            "Returns the collected data to application clients via an API gateway or BFF gateways.",
        ),
        sources=("azure-architecture-guide",),
    ),
    Pattern(
        id="proxy-microservices",
        name="Proxy microservices",
        area="communication",
        summary="Collect related items of data from multiple microservices through dumb and smart proxies",
        constraints=(
            "Dumb proxies only delegate requests; smart proxies transform data before responding.",
        ),
        sources=("azure-architecture-guide",),
    ),
    Pattern(
        id="remote-procedure-invocation",
        name="Remote procedure invocation",
        area="communication",
        summary="Establish inter-service communication via a request/reply-based protocol",
        impacts=(
            _plus("flexibility"),
            _plus("reusability"),
            _plus("performance"),
        ),
        constraints=(
            "Uses request/reply-based domain-specific protocols (e.g., SMTP, IMAP, RTMP) with technologies such as REST, gRPC, and Apache Thrift.",
        ),
        sources=("microservices.io",),
    ),
    Pattern(
        id="asynchronous-messaging",
        name="Asynchronous messaging",
        area="communication",
        summary="Message sender does not wait for response of corresponding recipient microservices",
        impacts=(
            _plus("scalability"),
            _plus("coupling", "choreography keeps senders and recipients loosely coupled"),
            _minus("testability", "debugging asynchronous messaging is difficult"),
        ),
        constraints=(
            "Adopts a choreography style; implemented with messaging technologies such as Apache Kafka and RabbitMQ.",
        ),
        sources=("oreilly-microservices-vs-soa",),
    ),
    Pattern(
        id="publish-subscribe-messaging",
        name="Publish-subscribe messaging",
        area="communication",
        summary="Allow sender microservice to broadcast the message to zero or more recipient microservices",
        impacts=(
            _plus("scalability", "broadcast fan-out scales with recipients"),
            _plus("coupling", "sender stays unaware of its recipients"),
        ),
        sources=("oreilly-microservices-vs-soa", "azure-architecture-guide"),
    ),
    Pattern(
        id="publish-asynchronous-messaging",
        name="Publish-asynchronous messaging",
        area="communication",
        summary=(
            "Allow sender microservice to broadcast the message to one or more recipient "
            "microservices and get the response from some recipient microservices"
        ),
        impacts=(
            _plus("scalability", "broadcast fan-out scales with recipients"),
            _plus("flexibility", "recipients decide whether to answer"),
        ),
        sources=("oreilly-microservices-vs-soa", "azure-architecture-guide"),
    ),
    Pattern(
        id="asynchronous-request-reply",
        name="Asynchronous request-reply",
        area="communication",
        summary=(
            "Allow sender microservice to directly send a request message to a recipient "
            "microservice and get the immediate response"
        ),
        impacts=(
            _plus("response-time", "direct request with an immediate response"),
        ),
        sources=("oreilly-microservices-vs-soa", "azure-architecture-guide"),
    ),
    Pattern(
        id="synchronous-messaging",
        name="Synchronous messaging",
        area="communication",
        summary="Message sender waits for response of corresponding recipient microservices",
        impacts=(
            _plus("availability"),
            _plus("scalability"),
            _plus("maintainability"),
            _plus("testability"),
            _minus("coupling", "sender blocks on each recipient"),
        ),
        constraints=(
            "Implemented through HTTP calls in an orchestration style.",
        ),
        sources=("azure-architecture-guide",),
    ),
    Pattern(
        id="idempotent-consumer",
        name="Idempotent consumer",
        area="communication",
        summary="Detect and discard duplicate messages from sender microservices",
        impacts=(
            _plus("reliability", "duplicate deliveries cannot corrupt consumers"),
            _plus("data-consistency", "duplicates are discarded before processing"),
        ),
        constraints=(
            "Used with asynchronous or synchronous messaging to handle duplicate messages for consumer services.",
        ),
        sources=("microservices.io",),
    ),
    Pattern(
        id="anti-corruption-layer",
        name="Anti-corruption layer",
        area="communication",
        summary="Used to communicate the polyglot microservices",
        impacts=(
            _plus("availability"),
            _plus("interoperability"),
            _minus("latency", "extra layer between microservices"),
        ),
        constraints=(
            "Can also be used between legacy and new microservices systems for migration purposes.",
        ),
        sources=("azure-architecture-guide",),
    ),
    # --- service discovery ------------------------------------------------------
    Pattern(
        id="service-registry",
        name="Service registry",
        area="discovery",
        summary="Hold the dynamic IP addresses of all service instances",
        impacts=(
            _plus("scalability", "keeps locations current while instance counts change with workload"),
        ),
        constraints=(
            "Necessary for the implementation of all other service discovery patterns.",
        ),
        sources=("microservices.io", "service-discovery-overview"),
    ),
    Pattern(
        id="self-registration",
        name="Self registration",
        area="discovery",
        summary=(
            "Enables microservices to register their instances with service registry on service "
            "startup and update service status periodically"
        ),
        impacts=(
            _plus("scalability"),
            _plus("maintainability"),
            _plus("reusability"),
            _minus("coupling", "each service and its instances must register with the registry"),
        ),
        constraints=(
            "Each service instance must renew its registration with the service registry periodically.",
        ),
        sources=("microservices.io", "service-discovery-overview"),
    ),
    Pattern(
        id="3rd-party-registration",
        name="3rd party registration",
        area="discovery",
        summary="3rd party registration pattern is an alternative solution of Self registration pattern",
        impacts=(
            _plus("scalability"),
            _plus("coupling", "decreases coupling between microservices"),
        ),
        constraints=(
            "Service instances are registered on startup and unregistered on shutdown.",
        ),
        sources=("microservices.io", "service-discovery-overview"),
    ),
    Pattern(
        id="client-side-service-discovery",
        name="Client-side service discovery",
        area="discovery",
        summary="Directly access the dynamic addresses of service instances from service registry",
        impacts=(
            _plus("scalability"),
            _minus("coupling", "direct calls between clients and the service registry"),
        ),
        constraints=(
            "Separate service registration handling is needed per programming language used to develop the microservices.",
        ),
        sources=("microservices.io", "service-discovery-overview"),
    ),
    Pattern(
        id="server-side-service-discovery",
        name="Server-side service discovery",
        area="discovery",
        summary="Access the dynamic addresses of service instances via routers from service registry",
        impacts=(
            _plus("complexity", "simpler to implement than client-side discovery"),
        ),
        constraints=(
            "Clients request service locations via a router (load balancer) that queries the service registry.",
        ),
        sources=("microservices.io", "service-discovery-overview"),
    ),
    Pattern(
        id="microservice-chassis",
        name="Microservice chassis",
        area="discovery",
        summary="Enable the implementation of client-side service pattern via Microservices chassis frameworks",
        impacts=(
            _plus("availability"),
            _plus("resilience"),
        ),
        constraints=(
            "Microservices are developed with chassis frameworks such as Spring Boot, Spring Cloud, and Gizmo.",
        ),
        sources=("microservices.io", "service-discovery-overview"),
    ),
)


def _start() -> Node:
    return Node("start", NodeKind.START)


def _gateway(node_id: str, kind: NodeKind, label: str) -> Node:
    return Node(node_id, kind, label=label)


def _pattern_node(pattern_id: str) -> Node:
    return Node(pattern_id, NodeKind.PATTERN, pattern_ref=pattern_id)


def _edge(src: str, dst: str, condition: str | None = None) -> FlowEdge:
    return FlowEdge(src, dst, condition)


DECOMPOSITION_MODEL = DecisionModel(
    id="decomposition",
    title="Application decomposition",
    nodes=(
        _start(),
        _gateway(
            "g-team-size",
            NodeKind.GATEWAY_EXCLUSIVE,
            "Is the team size defined for designing and developing the microservices?",
        ),
        _gateway("g-driver", NodeKind.GATEWAY_EXCLUSIVE, "What drives the decomposition?"),
        _gateway(
            "g-source",
            NodeKind.GATEWAY_EXCLUSIVE,
            "What is the input for identifying the microservices?",
        ),
        _pattern_node("decomposed-by-subdomains"),
        _pattern_node("decomposed-by-business-capabilities"),
        _pattern_node("service-per-team"),
        _pattern_node("decomposed-by-transactions"),
        _pattern_node("scenario-analysis"),
        _pattern_node("graph-based-approach"),
        _pattern_node("data-flow-driven-approach"),
    ),
    flow_edges=(
        _edge("start", "g-team-size"),
        _edge("g-team-size", "g-driver", "team of 5-9 people per microservice"),
        _edge("g-team-size", "g-source", "team size not defined"),
        _edge("g-driver", "decomposed-by-subdomains", "define services by DDD subdomains"),
        _edge(
            "g-driver",
            "decomposed-by-business-capabilities",
            "define services by business capabilities",
        ),
        _edge("g-driver", "service-per-team", "align services with individual teams"),
        _edge("g-driver", "decomposed-by-transactions", "group services by business transactions"),
        _edge("g-driver", "scenario-analysis", "derive services from business scenarios"),
        _edge("g-source", "graph-based-approach", "legacy source code"),
        _edge("g-source", "data-flow-driven-approach", "data flow diagrams"),
    ),
    complements_edges=(
        ComplementsEdge("service-per-team", "decomposed-by-subdomains"),
        ComplementsEdge("service-per-team", "decomposed-by-business-capabilities"),
    ),
)

SECURITY_MODEL = DecisionModel(
    id="security",
    title="Microservices security",
    nodes=(
        _start(),
        _gateway(
            "g-levels",
            NodeKind.GATEWAY_INCLUSIVE,
            "At which levels does the system need to be secured?",
        ),
        _gateway(
            "g-application",
            NodeKind.GATEWAY_INCLUSIVE,
            "Which application-level protections apply?",
        ),
        _gateway(
            "g-communication",
            NodeKind.GATEWAY_INCLUSIVE,
            "Which communication-level protections apply?",
        ),
        _gateway("g-code", NodeKind.GATEWAY_INCLUSIVE, "Which code-level protections apply?"),
        _pattern_node("access-and-identity-tokens"),
        _pattern_node("layered-defense"),
        _pattern_node("service-level-authorization"),
        _pattern_node("edge-level-authorization"),
        _pattern_node("https-enforcement"),
        _pattern_node("api-rate-limiting"),
        _pattern_node("encrypt-and-protect-secrets"),
        _pattern_node("scan-dependencies"),
    ),
    flow_edges=(
        _edge("start", "g-levels"),
        _edge("g-levels", "g-application", "application level"),
        _edge("g-levels", "g-communication", "communication level"),
        _edge("g-levels", "g-code", "code level"),
        _edge("g-application", "access-and-identity-tokens", "verify user privileges with security tokens"),
        _edge("g-application", "layered-defense", "defense-in-depth via layered API gateways"),
        _edge("g-communication", "service-level-authorization", "each microservice enforces its own policies"),
        _edge("g-communication", "edge-level-authorization", "authorize once at the API gateway"),
        _edge("g-communication", "https-enforcement", "encrypt traffic between microservices"),
        _edge("g-code", "api-rate-limiting", "slow down attackers"),
        _edge("g-code", "encrypt-and-protect-secrets", "protect API keys and credentials"),
        _edge("g-code", "scan-dependencies", "detect vulnerable dependencies"),
    ),
    complements_edges=(
        ComplementsEdge("edge-level-authorization", "https-enforcement"),
    ),
)

COMMUNICATION_MODEL = DecisionModel(
    id="communication",
    title="Microservices communication",
    nodes=(
        _start(),
        _gateway("g-scope", NodeKind.GATEWAY_EXCLUSIVE, "What needs to communicate?"),
        _gateway(
            "g-client-concerns",
            NodeKind.GATEWAY_INCLUSIVE,
            "Which client-interaction concerns apply?",
        ),
        _gateway(
            "g-entry-point",
            NodeKind.GATEWAY_EXCLUSIVE,
            "How do application clients enter the system?",
        ),
        _gateway(
            "g-aggregation",
            NodeKind.GATEWAY_EXCLUSIVE,
            "How is data from multiple microservices collected?",
        ),
        _gateway(
            "g-interservice-concerns",
            NodeKind.GATEWAY_INCLUSIVE,
            "Which inter-service concerns apply?",
        ),
        _gateway("g-style", NodeKind.GATEWAY_EXCLUSIVE, "Which interaction style fits?"),
        _gateway(
            "g-variants",
            NodeKind.GATEWAY_INCLUSIVE,
            "Which messaging variants are needed?",
        ),
        _pattern_node("api-gateway"),
        _pattern_node("bff"),
        _pattern_node("aggregator-microservice"),
        _pattern_node("proxy-microservices"),
        _pattern_node("remote-procedure-invocation"),
        _pattern_node("asynchronous-messaging"),
        _pattern_node("synchronous-messaging"),
        _pattern_node("publish-subscribe-messaging"),
        _pattern_node("publish-asynchronous-messaging"),
        _pattern_node("asynchronous-request-reply"),
        _pattern_node("idempotent-consumer"),
        _pattern_node("anti-corruption-layer"),
    ),
    flow_edges=(
        _edge("start", "g-scope"),
        _edge("g-scope", "g-client-concerns", "client-to-service interaction"),
        _edge("g-scope", "g-interservice-concerns", "inter-service communication"),
        _edge("g-client-concerns", "g-entry-point", "single entry point for clients"),
        _edge("g-client-concerns", "g-aggregation", "aggregate data from multiple microservices"),
        _edge("g-entry-point", "api-gateway", "one entry point for all clients"),
        _edge("g-entry-point", "bff", "separate gateway per client type"),
        _edge("g-aggregation", "aggregator-microservice", "dedicated aggregator microservice"),
        _edge("g-aggregation", "proxy-microservices", "dumb and smart proxies"),
        _edge("g-interservice-concerns", "g-style", "interaction style"),
        _edge("g-interservice-concerns", "g-variants", "broadcast or reply-based messaging"),
        _edge("g-interservice-concerns", "idempotent-consumer", "consumers may receive duplicate messages"),
        _edge("g-interservice-concerns", "anti-corruption-layer", "polyglot or legacy services must communicate"),
        _edge("g-style", "remote-procedure-invocation", "request/reply protocol"),
        _edge("g-style", "asynchronous-messaging", "sender does not wait for responses"),
        _edge("g-style", "synchronous-messaging", "sender waits for responses"),
        _edge("g-variants", "publish-subscribe-messaging", "broadcast to zero or more recipients"),
        _edge("g-variants", "publish-asynchronous-messaging", "broadcast and gather some responses"),
        _edge("g-variants", "asynchronous-request-reply", "direct request with immediate response"),
    ),
    complements_edges=(
        ComplementsEdge("aggregator-microservice", "api-gateway"),
        ComplementsEdge("aggregator-microservice", "bff"),
        ComplementsEdge("proxy-microservices", "api-gateway"),
        ComplementsEdge("proxy-microservices", "bff"),
        ComplementsEdge("asynchronous-messaging", "publish-subscribe-messaging"),
        ComplementsEdge("asynchronous-messaging", "publish-asynchronous-messaging"),
        ComplementsEdge("asynchronous-messaging", "asynchronous-request-reply"),
        ComplementsEdge("idempotent-consumer", "asynchronous-messaging"),
        ComplementsEdge("idempotent-consumer", "synchronous-messaging"),
    ),
)

DISCOVERY_MODEL = DecisionModel(
    id="discovery",
    title="Service discovery",
    nodes=(
        _start(),
        _gateway("g-discovery", NodeKind.GATEWAY_PARALLEL, "Set up service discovery"),
        _gateway(
            "g-registration",
            NodeKind.GATEWAY_EXCLUSIVE,
            "How do service instances register with the registry?",
        ),
        _gateway(
            "g-lookup",
            NodeKind.GATEWAY_EXCLUSIVE,
            "How do clients locate service instances?",
        ),
        _pattern_node("service-registry"),
        _pattern_node("self-registration"),
        _pattern_node("3rd-party-registration"),
        _pattern_node("client-side-service-discovery"),
        _pattern_node("server-side-service-discovery"),
        _pattern_node("microservice-chassis"),
    ),
    flow_edges=(
        _edge("start", "g-discovery"),
        _edge("g-discovery", "service-registry"),
        _edge("g-discovery", "g-registration"),
        _edge("g-discovery", "g-lookup"),
        _edge("g-registration", "self-registration", "instances register themselves"),
        _edge("g-registration", "3rd-party-registration", "a third party registers instances"),
        _edge("g-lookup", "client-side-service-discovery", "clients query the registry directly"),
        _edge("g-lookup", "server-side-service-discovery", "clients go through a router"),
        _edge("g-lookup", "microservice-chassis", "discovery built into a chassis framework"),
    ),
    complements_edges=(
        ComplementsEdge("client-side-service-discovery", "self-registration"),
        ComplementsEdge("client-side-service-discovery", "microservice-chassis"),
    ),
)

MODELS = (DECOMPOSITION_MODEL, SECURITY_MODEL, COMMUNICATION_MODEL, DISCOVERY_MODEL)

_BUILTIN = KnowledgeBase(
    version="1",
    qa_catalog=QA_CATALOG,
    patterns=PATTERNS,
    models=MODELS,
)


def builtin_kb() -> KnowledgeBase:
    """The compiled-in catalog: 7 decomposition, 8 security, 12 communication, 6 discovery patterns."""
    return _BUILTIN
