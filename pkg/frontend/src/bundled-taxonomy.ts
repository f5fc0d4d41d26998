/** Read-only fallback snapshot of the canonical matrix, for when the API
 * is unreachable. Regenerate from data/bhadra-v1.json when the matrix
 * version changes. */

import type { TaxonomyDoc } from "./types.js";

export const BUNDLED_TAXONOMY: TaxonomyDoc = {
  "version": "1.0.0",
  "provenance": "Canonical matrix v1 of the Bhadra threat-modeling framework for mobile communication systems. Technique row numbers within each tactic follow the order in which the framework's public description first names them. The five Persistence technique labels are an editorial reconstruction: the original matrix figure names them only graphically, so these labels and their order are maintainers' choices, not normative, and may be revised in a future versioned file. Subsystem and adversary annotations are conservative editorial readings shipped as editable data; LawEnforcementGovernment is listed on every technique because nation-state actors can subsume the access of every other class (recruited insiders, compelled operators and manufacturers, own radio equipment). Severity is reserved as an optional future dimension and is intentionally absent from v1.",
  "phases": [
    {
      "id": "Mounting",
      "ordinal": 1
    },
    {
      "id": "Execution",
      "ordinal": 2
    },
    {
      "id": "Results",
      "ordinal": 3
    }
  ],
  "tactics": [
    {
      "id": "IA",
      "name": "Initial Access",
      "phase": "Mounting",
      "ordinal": 1,
      "description": "Entry points through which an adversary first reaches a mobile network, its subscribers, or its supporting systems."
    },
    {
      "id": "PE",
      "name": "Persistence",
      "phase": "Mounting",
      "ordinal": 2,
      "description": "Ways an adversary keeps the foothold gained at the entry point across restarts, audits, and credential or configuration changes."
    },
    {
      "id": "DI",
      "name": "Discovery",
      "phase": "Mounting",
      "ordinal": 3,
      "description": "Probing and research performed from a foothold to map reachable nodes, addresses, targets, and protections."
    },
    {
      "id": "LM",
      "name": "Lateral Movement",
      "phase": "Execution",
      "ordinal": 4,
      "description": "Moving from the initial foothold to other nodes, networks, or operators that were not directly reachable from outside."
    },
    {
      "id": "SP",
      "name": "Standard Protocols Misuse",
      "phase": "Execution",
      "ordinal": 5,
      "description": "Crafting legitimate-looking messages of standard telecom protocols with hostile intent, exploiting features rather than software bugs."
    },
    {
      "id": "DE",
      "name": "Defense Evasion",
      "phase": "Execution",
      "ordinal": 6,
      "description": "Staying ahead of filtering, firewalls, audits, and device-side protections while an attack is underway."
    },
    {
      "id": "CO",
      "name": "Collection",
      "phase": "Results",
      "ordinal": 7,
      "description": "Sensitive identifiers, data, and credentials the adversary gathers as an attack pays off."
    },
    {
      "id": "IM",
      "name": "Impacts",
      "phase": "Results",
      "ordinal": 8,
      "description": "The top-level outcome the adversary set out to achieve against subscribers or operators."
    }
  ],
  "techniques": [
    {
      "id": "IA.1",
      "name": "Attacks from UE",
      "tactic": "IA",
      "description": "Malicious traffic pushed into the network from handset software or hardware: malware herds of infected devices, or hand-crafted packets from a rooted phone.",
      "subsystems": [
        "UE"
      ],
      "adversaries": [
        "SoftwareOsVendor",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": [
        "Traynor et al. On cellular botnets: measuring the impact of malicious devices on a cellular network core. CCS 2009.",
        "Peng, Li, Tu, Lu, Wang. Mobile data charging: new attacks and countermeasures. CCS 2012."
      ]
    },
    {
      "id": "IA.2",
      "name": "SIM-based attacks",
      "tactic": "IA",
      "description": "Entry through the subscriber's smart card: swapped or cloned SIMs, or abuse of on-card application toolkits reachable by binary SMS.",
      "subsystems": [
        "UE"
      ],
      "adversaries": [
        "HumanInsider",
        "HardwareSimManufacturer",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Lee et al. An empirical study of wireless carrier authentication for SIM swaps. SOUPS 2020.",
        "Nohl. Rooting SIM cards. Black Hat USA 2013.",
        "AdaptiveMobile Security. Simjacker technical report. 2019."
      ]
    },
    {
      "id": "IA.3",
      "name": "Attacks from radio access network",
      "tactic": "IA",
      "description": "A rogue base station within radio range lures handsets onto attacker-controlled radio, opening the door to identifier capture, interception, and service denial.",
      "subsystems": [
        "RAN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Shaik et al. Practical attacks against privacy and availability in 4G/LTE mobile communication systems. NDSS 2016.",
        "Golde, Redon, Borgaonkar. Weaponizing femtocells. NDSS 2012."
      ]
    },
    {
      "id": "IA.4",
      "name": "Attacks from other mobile networks",
      "tactic": "IA",
      "description": "Signaling launched from a partner operator's network over interconnection and roaming links, arriving at the victim network as apparently legitimate inter-operator traffic.",
      "subsystems": [
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Engel. SS7: locate, track, manipulate. 31C3 2014."
      ]
    },
    {
      "id": "IA.5",
      "name": "Attacks with physical access to transport network",
      "tactic": "IA",
      "description": "Attacks mounted from inside the victim operator's own transport and core infrastructure by whoever can reach the wires and nodes directly.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "IA.6",
      "name": "IP-based attacks",
      "tactic": "IA",
      "description": "Internet-side entry through the service and application network: SIP abuse, DNS tricks, exposed GPRS interfaces, and the general arsenal of IP attacks aimed at operator infrastructure.",
      "subsystems": [
        "SAN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": []
    },
    {
      "id": "IA.7",
      "name": "Insider attacks and human errors",
      "tactic": "IA",
      "description": "Deliberate abuse or careless mistakes by people with legitimate access, from retail customer-service desks to operations and maintenance staff.",
      "subsystems": [
        "CN",
        "SAN",
        "OSMN"
      ],
      "adversaries": [
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "PE.1",
      "name": "Infecting UE",
      "tactic": "PE",
      "description": "Holding the device itself: malware or supply-chain implants on the handset that survive until detected and removed.",
      "subsystems": [
        "UE"
      ],
      "adversaries": [
        "HardwareSimManufacturer",
        "SoftwareOsVendor",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": []
    },
    {
      "id": "PE.2",
      "name": "Infecting SIM cards",
      "tactic": "PE",
      "description": "A compromised or exploitable SIM keeps serving the adversary until the card is physically replaced; no software patch can reach it.",
      "subsystems": [
        "UE"
      ],
      "adversaries": [
        "HardwareSimManufacturer",
        "LawEnforcementGovernment"
      ],
      "references": [
        "AdaptiveMobile Security. Simjacker technical report. 2019."
      ]
    },
    {
      "id": "PE.3",
      "name": "Infecting network nodes",
      "tactic": "PE",
      "description": "Malware or implants placed on operator nodes persist until operators detect and clean them, which routine operations rarely force.",
      "subsystems": [
        "CN",
        "SAN",
        "OSMN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "HardwareSimManufacturer",
        "SoftwareOsVendor",
        "LawEnforcementGovernment"
      ],
      "references": [
        "FireEye Threat Research. MESSAGETAP: who is reading your text messages? 2019."
      ]
    },
    {
      "id": "PE.4",
      "name": "Persistent spoofed radio connection",
      "tactic": "PE",
      "description": "Keeping victims camped on attacker radio: control lasts exactly as long as the UE stays attached to the spoofed cell.",
      "subsystems": [
        "RAN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "PE.5",
      "name": "Covert channels / insider persistence",
      "tactic": "PE",
      "description": "Backup access arranged around the initial foothold: opened ports, planted remote-management tooling, or an insider who simply stays unnoticed.",
      "subsystems": [
        "CN",
        "OSMN"
      ],
      "adversaries": [
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DI.1",
      "name": "Port scanning or sweeping",
      "tactic": "DI",
      "description": "Probing hosts behind the operator perimeter for open ports and the services listening on them, with the same tools administrators use for audits.",
      "subsystems": [
        "CN",
        "SAN",
        "OSMN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DI.2",
      "name": "Perimeter mapping",
      "tactic": "DI",
      "description": "ASN, address-range, and routing lookups that chart how far an operator's routable estate extends and where its edges sit.",
      "subsystems": [
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": []
    },
    {
      "id": "DI.3",
      "name": "Threat intelligence gathering",
      "tactic": "DI",
      "description": "Mining public scan engines and vulnerability feeds for exposed operator assets instead of scanning them directly.",
      "subsystems": [
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": [
        "Durumeric, Adrian, Mirian, Bailey, Halderman. A search engine backed by Internet-wide scanning. CCS 2015."
      ]
    },
    {
      "id": "DI.4",
      "name": "CN-specific scanning",
      "tactic": "DI",
      "description": "Enumerating signaling-side nodes by global title and point code with telecom-specific scanners, where plain IP tooling cannot see.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DI.5",
      "name": "Internal resource search",
      "tactic": "DI",
      "description": "Shortcutting discovery with privileged documentation such as inter-operator roaming databases that list partner nodes, addresses, and agreements.",
      "subsystems": [
        "CN",
        "OSMN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "HardwareSimManufacturer",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DI.6",
      "name": "UE knocking",
      "tactic": "DI",
      "description": "Probing a handset rather than a server: testing whether a given subscriber is reachable in a location and which generations and ciphers the device will accept.",
      "subsystems": [
        "UE",
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "LM.1",
      "name": "Exploit roaming agreements",
      "tactic": "LM",
      "description": "Riding a compromised operator's roaming relationships to reach partner networks that would reject the adversary's own traffic.",
      "subsystems": [
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "LM.2",
      "name": "Abusing inter-working functionalities",
      "tactic": "LM",
      "description": "Using the protocol-translation gateways between network generations as a bridge, attacking newer deployments through the weaker protocols of older ones.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Holtmanns, Rao, Oliver. User location tracking attacks for LTE networks using the interworking functionality. IFIP Networking 2016."
      ]
    },
    {
      "id": "LM.3",
      "name": "Exploit platform and service-specific vulnerabilities",
      "tactic": "LM",
      "description": "Ordinary host-level compromise inside the operator estate: privilege escalation, credential cracking, and misconfigured services on nodes that are, underneath, regular computers.",
      "subsystems": [
        "CN",
        "SAN",
        "OSMN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "SoftwareOsVendor",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "SP.1",
      "name": "SS7-based attacks",
      "tactic": "SP",
      "description": "Well-formed SS7/MAP signaling sent with hostile intent; with no authentication in the protocol suite, network access is authorization enough.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Engel. Locating mobile phones using Signalling System #7. 25C3 2008.",
        "Engel. SS7: locate, track, manipulate. 31C3 2014."
      ]
    },
    {
      "id": "SP.2",
      "name": "Diameter-based attacks",
      "tactic": "SP",
      "description": "The LTE signaling suite inherits much of the SS7 attack surface in practice, through optional protections left undeployed and through translation from legacy networks.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Holtmanns, Rao, Oliver. User location tracking attacks for LTE networks using the interworking functionality. IFIP Networking 2016."
      ]
    },
    {
      "id": "SP.3",
      "name": "GTP-based attacks",
      "tactic": "SP",
      "description": "Forged tunnel-management messages aimed at the packet gateways; GTP carries no authentication and is reachable from roaming partners and sometimes the open Internet.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Positive Technologies. Threat vector: GTP. 2020."
      ]
    },
    {
      "id": "SP.4",
      "name": "DNS-based attacks",
      "tactic": "SP",
      "description": "Abusing DNS handling in mobile data service: tunneling payload in queries that bill as free, or hijacking resolution to drag sessions through attacker infrastructure.",
      "subsystems": [
        "UE",
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": [
        "Peng, Li, Tu, Lu, Wang. Mobile data charging: new attacks and countermeasures. CCS 2012.",
        "Rupprecht, Kohls, Holz, Pöpper. Breaking LTE on layer two. IEEE S&P 2019."
      ]
    },
    {
      "id": "SP.5",
      "name": "Pre-AKA attacks",
      "tactic": "SP",
      "description": "Exploiting the unprotected radio dialogue that precedes authentication and key agreement, while the handset must still take the network at its word.",
      "subsystems": [
        "UE",
        "RAN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Borgaonkar, Hirschi, Park, Shaik. New privacy threat on 3G, 4G, and upcoming 5G AKA protocols. PETS 2019."
      ]
    },
    {
      "id": "DE.1",
      "name": "Security audit camouflage",
      "tactic": "DE",
      "description": "Arranging a compromise so that routine operator audits, traffic baselines, and forensic sweeps keep coming back clean.",
      "subsystems": [
        "CN",
        "OSMN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "SoftwareOsVendor",
        "LawEnforcementGovernment"
      ],
      "references": [
        "FireEye Threat Research. MESSAGETAP: who is reading your text messages? 2019."
      ]
    },
    {
      "id": "DE.2",
      "name": "Blacklist evasion",
      "tactic": "DE",
      "description": "Sourcing traffic from identities on the victim's allowlists; unauthenticated telecom protocols let a knowledgeable sender claim any trusted node address.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DE.3",
      "name": "Middlebox misconfiguration exploit",
      "tactic": "DE",
      "description": "Slipping traffic through mis-set NAT and filtering boxes at the Internet boundary, including header spoofing and address-mapping exhaustion.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": [
        "Wang, Qian, Xu, Mao. An untold story of middleboxes in cellular networks. SIGCOMM 2011."
      ]
    },
    {
      "id": "DE.4",
      "name": "Bypass firewall",
      "tactic": "DE",
      "description": "Hiding attack signaling inside the legitimate roaming exchange that firewalls must let through, exploiting the implicit trust between partner operators.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DE.5",
      "name": "Bypass home routing",
      "tactic": "DE",
      "description": "Wrapping location-leaking queries so the inbound SMS router fails to intercept them, undoing the protection it was deployed to provide.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DE.6",
      "name": "Downgrading",
      "tactic": "DE",
      "description": "Refusing or jamming the stronger option until victim traffic falls back to a weaker generation or protocol the adversary can break.",
      "subsystems": [
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DE.7",
      "name": "Redirection",
      "tactic": "DE",
      "description": "Forcing victim traffic through networks or nodes under adversary control, for interception or for tariff manipulation.",
      "subsystems": [
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "DE.8",
      "name": "UE protection evasion",
      "tactic": "DE",
      "description": "Staying invisible on the handset itself, where network-level attacks raise no notification and device antivirus has nothing to inspect.",
      "subsystems": [
        "UE"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "LawEnforcementGovernment"
      ],
      "references": [
        "AdaptiveMobile Security. Simjacker technical report. 2019."
      ]
    },
    {
      "id": "CO.1",
      "name": "Admin credentials",
      "tactic": "CO",
      "description": "Login material for operator nodes, harvested to deepen persistence or to masquerade as legitimate administration.",
      "subsystems": [
        "CN",
        "OSMN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "SoftwareOsVendor",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "CO.2",
      "name": "User-specific identifiers",
      "tactic": "CO",
      "description": "Permanent and temporary subscriber identifiers and SIM key material: IMSI, IMEI, MSISDN, TMSI/GUTI, and the mappings between them.",
      "subsystems": [
        "UE",
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "HardwareSimManufacturer",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Hong, Bae, Kim. GUTI reallocation demystified: cellular location tracking with changing temporary identifier. NDSS 2018."
      ]
    },
    {
      "id": "CO.3",
      "name": "User-specific data",
      "tactic": "CO",
      "description": "Subscriber content and records: call and SMS contents, location dumps, billing records, and browsing metadata.",
      "subsystems": [
        "RAN",
        "CN",
        "SAN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "CO.4",
      "name": "Network-specific identifiers",
      "tactic": "CO",
      "description": "Addresses that name the operator's own equipment: global titles, node IPs, and tunnel endpoint identifiers.",
      "subsystems": [
        "CN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "CO.5",
      "name": "Network-specific data",
      "tactic": "CO",
      "description": "Topology, trust relationships, routing metadata, and internal documents describing how the operator's network hangs together.",
      "subsystems": [
        "CN",
        "OSMN",
        "IRN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "SoftwareOsVendor",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "IM.1",
      "name": "Location tracking",
      "tactic": "IM",
      "description": "Determining where a subscriber is, at precision from serving country down to street level, by abusing the location exchange that mobility itself requires.",
      "subsystems": [
        "RAN",
        "CN",
        "SAN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Engel. Locating mobile phones using Signalling System #7. 25C3 2008.",
        "Shaik et al. Practical attacks against privacy and availability in 4G/LTE mobile communication systems. NDSS 2016."
      ]
    },
    {
      "id": "IM.2",
      "name": "Calls eavesdropping",
      "tactic": "IM",
      "description": "Listening to voice calls, whether by breaking weak radio ciphers or by rerouting call legs through attacker-reachable nodes in the cleartext core.",
      "subsystems": [
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "IM.3",
      "name": "SMS interception",
      "tactic": "IM",
      "description": "Reading or diverting text messages in transit, one-time passwords included, via radio capture or signaling-level delivery manipulation.",
      "subsystems": [
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": [
        "FireEye Threat Research. MESSAGETAP: who is reading your text messages? 2019."
      ]
    },
    {
      "id": "IM.4",
      "name": "Data (Internet traffic) interception",
      "tactic": "IM",
      "description": "Capturing or altering subscriber Internet traffic, from metadata fingerprinting on the radio link to full man-in-the-middle under null ciphers or spoofed DNS.",
      "subsystems": [
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": [
        "Rupprecht, Kohls, Holz, Pöpper. Breaking LTE on layer two. IEEE S&P 2019."
      ]
    },
    {
      "id": "IM.5",
      "name": "Billing frauds",
      "tactic": "IM",
      "description": "Causing money to move wrongly: free service at another party's expense, inflated tariffs, or spam traffic that corrupts accounting.",
      "subsystems": [
        "UE",
        "CN",
        "SAN",
        "IRN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": [
        "Sahin, Francillon, Gupta, Ahamad. SoK: fraud in telephony networks. EuroS&P 2017."
      ]
    },
    {
      "id": "IM.6",
      "name": "Denial of service - network",
      "tactic": "IM",
      "description": "Exhausting operator infrastructure with signaling or traffic floods, from radio resource churn to botnet pressure on core databases.",
      "subsystems": [
        "RAN",
        "CN",
        "SAN"
      ],
      "adversaries": [
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": [
        "Traynor et al. On cellular botnets: measuring the impact of malicious devices on a cellular network core. CCS 2009."
      ]
    },
    {
      "id": "IM.7",
      "name": "Denial of service - user",
      "tactic": "IM",
      "description": "Cutting specific subscribers off, by radio jamming nearby or by corrupting their subscription and location records from the core.",
      "subsystems": [
        "UE",
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment"
      ],
      "references": []
    },
    {
      "id": "IM.8",
      "name": "Identity-based attacks",
      "tactic": "IM",
      "description": "Wielding captured identifiers: impersonating subscribers to the network without their credentials, or mapping temporary identities back to permanent ones.",
      "subsystems": [
        "UE",
        "RAN",
        "CN"
      ],
      "adversaries": [
        "RadioLinkAttacker",
        "EvilMobileOperator",
        "HumanInsider",
        "LawEnforcementGovernment",
        "EvilMobileUser"
      ],
      "references": [
        "Rupprecht, Kohls, Holz, Pöpper. IMP4GT: impersonation attacks in 4G networks. NDSS 2020."
      ]
    }
  ]
} as TaxonomyDoc;
